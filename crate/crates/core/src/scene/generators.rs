//! Deterministic generators for every scenario family used by the scoring
//! experiments: the six standard benchmarks, uniform random worlds, the
//! three hypothesis-test pairs and the obstacle-gap sweep.
//!
//! All generators are pure functions of their arguments and seed; equal
//! inputs produce byte-identical scenarios. Dimensions not fixed by the
//! benchmark definitions (room sizes, spawn and goal regions) are the
//! constants below, aligned to the 0.5 m planning grid.

use crate::geom::{self, Polygon, Rect, Vec2};
use crate::scene::{ObstacleConfig, Scenario, Task, DEFAULT_MAX_STEPS, DEFAULT_RADIUS};
use crate::util::mix_seed;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum GenError {
    #[error("unknown benchmark `{0}`")]
    UnknownBenchmark(String),
    #[error("unknown hypothesis test `{0}`")]
    UnknownTest(String),
    #[error("count must be at least 1")]
    ZeroCount,
    #[error("failed to place {what} after {attempts} attempts (world too crowded)")]
    PlacementFailed { what: &'static str, attempts: u32 },
    #[error("gap {0} m is too small for any feasible path")]
    GapTooSmall(f64),
}

/// The six standard crowd benchmarks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Benchmark {
    /// 30 agents evacuate a room through a 2.4 m doorway.
    Evac1,
    /// 30 agents evacuate a room through a 1.4 m doorway.
    Evac2,
    /// 30 agents enter and traverse a 4.2 m wide hallway.
    Bottleneck,
    /// 20 agents on a circle swap to antipodal positions.
    Concentric,
    /// 30 agents travel in either direction through a 16 m wide hallway.
    Hallway2,
    /// 32 agents arrive from and travel to any of four cardinal directions.
    Hallway4,
}

impl Benchmark {
    pub const ALL: [Benchmark; 6] = [
        Benchmark::Evac1,
        Benchmark::Evac2,
        Benchmark::Bottleneck,
        Benchmark::Concentric,
        Benchmark::Hallway2,
        Benchmark::Hallway4,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Benchmark::Evac1 => "evac1",
            Benchmark::Evac2 => "evac2",
            Benchmark::Bottleneck => "bottleneck",
            Benchmark::Concentric => "concentric",
            Benchmark::Hallway2 => "hallway2",
            Benchmark::Hallway4 => "hallway4",
        }
    }
}

impl std::str::FromStr for Benchmark {
    type Err = GenError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Benchmark::ALL
            .into_iter()
            .find(|b| b.id() == s)
            .ok_or_else(|| GenError::UnknownBenchmark(s.into()))
    }
}

/// The three designed scenario pairs for the hypothesis tests.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HypothesisTest {
    TemporalAccumulation,
    ConsequentInteraction,
    MovementDirection,
}

impl HypothesisTest {
    pub const ALL: [HypothesisTest; 3] = [
        HypothesisTest::TemporalAccumulation,
        HypothesisTest::ConsequentInteraction,
        HypothesisTest::MovementDirection,
    ];

    pub fn id(self) -> &'static str {
        match self {
            HypothesisTest::TemporalAccumulation => "temporal_accumulation",
            HypothesisTest::ConsequentInteraction => "consequent_interaction",
            HypothesisTest::MovementDirection => "movement_direction",
        }
    }
}

impl std::str::FromStr for HypothesisTest {
    type Err = GenError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        HypothesisTest::ALL
            .into_iter()
            .find(|t| t.id() == s)
            .ok_or_else(|| GenError::UnknownTest(s.into()))
    }
}

fn rect_poly(x0: f64, y0: f64, x1: f64, y1: f64) -> Polygon {
    vec![
        Vec2::new(x0, y0),
        Vec2::new(x1, y0),
        Vec2::new(x1, y1),
        Vec2::new(x0, y1),
    ]
}

fn task(id: u32, start: Vec2, goal: Vec2) -> Task {
    Task {
        id,
        start,
        goal,
        start_time: 0.0,
        max_steps: DEFAULT_MAX_STEPS,
        radius: DEFAULT_RADIUS,
    }
}

fn sample_in(rng: &mut ChaCha8Rng, region: &Rect) -> Vec2 {
    let x = rng.random_range(region.min.x..region.max.x);
    let y = rng.random_range(region.min.y..region.max.y);
    Vec2::new(x, y)
}

/// Rejection-samples `count` points in `region`, pairwise at least
/// `min_sep` apart and clear of the obstacle polygons by `clearance`.
fn sample_spread(
    rng: &mut ChaCha8Rng,
    region: &Rect,
    count: usize,
    min_sep: f64,
    polygons: &[Polygon],
    clearance: f64,
    what: &'static str,
) -> Result<Vec<Vec2>, GenError> {
    const MAX_ATTEMPTS: u32 = 20_000;
    let mut points: Vec<Vec2> = Vec::with_capacity(count);
    let mut attempts = 0u32;
    while points.len() < count {
        attempts += 1;
        if attempts > MAX_ATTEMPTS {
            return Err(GenError::PlacementFailed {
                what,
                attempts: MAX_ATTEMPTS,
            });
        }
        let p = sample_in(rng, region);
        if points.iter().any(|q| q.dist(p) < min_sep) {
            continue;
        }
        if polygons
            .iter()
            .any(|poly| geom::dist_point_polygon(p, poly) < clearance)
        {
            continue;
        }
        points.push(p);
    }
    Ok(points)
}

struct BenchmarkWorld {
    config: ObstacleConfig,
    spawn: Rect,
    goal: Rect,
    agents: usize,
}

fn evac_world(door_width: f64, label: &str) -> BenchmarkWorld {
    // Room interior x in [1, 11], y in [1, 9]; door in the right wall.
    let door_center = 4.85;
    let lo = door_center - door_width / 2.0;
    let hi = door_center + door_width / 2.0;
    let polygons = vec![
        rect_poly(0.5, 0.5, 1.0, 9.5),   // left wall
        rect_poly(0.5, 0.5, 11.5, 1.0),  // bottom wall
        rect_poly(0.5, 9.0, 11.5, 9.5),  // top wall
        rect_poly(11.0, 0.5, 11.5, lo),  // right wall below door
        rect_poly(11.0, hi, 11.5, 9.5),  // right wall above door
    ];
    BenchmarkWorld {
        config: ObstacleConfig {
            label: label.to_string(),
            bounds: Rect::new(0.0, 0.0, 16.0, 10.0),
            polygons,
        },
        spawn: Rect::new(1.5, 1.5, 9.5, 8.5),
        goal: Rect::new(13.0, 3.5, 15.5, 6.5),
        agents: 30,
    }
}

fn bottleneck_world() -> BenchmarkWorld {
    // Open staging area funneling into a 4.2 m wide, 12 m long hallway.
    let polygons = vec![
        rect_poly(7.0, 3.0, 19.0, 3.9),
        rect_poly(7.0, 8.1, 19.0, 9.0),
    ];
    BenchmarkWorld {
        config: ObstacleConfig {
            label: "bottleneck".into(),
            bounds: Rect::new(0.0, 0.0, 26.0, 12.0),
            polygons,
        },
        spawn: Rect::new(1.0, 1.0, 6.0, 11.0),
        goal: Rect::new(20.5, 4.5, 25.0, 7.5),
        agents: 30,
    }
}

/// Generates `count` scenarios of the given benchmark by re-sampling agent
/// starts and goals inside the benchmark's spawn and goal regions.
pub fn gen_exsd(benchmark: Benchmark, seed: u64, count: usize) -> Result<Vec<Scenario>, GenError> {
    if count == 0 {
        return Err(GenError::ZeroCount);
    }
    (0..count)
        .map(|index| {
            let mut rng = ChaCha8Rng::seed_from_u64(mix_seed(seed, index as u64));
            let name = format!("{}-s{}-{:03}", benchmark.id(), seed, index);
            match benchmark {
                Benchmark::Evac1 => evac_scenario(&mut rng, name, evac_world(2.4, "evac1")),
                Benchmark::Evac2 => evac_scenario(&mut rng, name, evac_world(1.4, "evac2")),
                Benchmark::Bottleneck => evac_scenario(&mut rng, name, bottleneck_world()),
                Benchmark::Concentric => concentric_scenario(&mut rng, name),
                Benchmark::Hallway2 => hallway2_scenario(&mut rng, name),
                Benchmark::Hallway4 => hallway4_scenario(&mut rng, name),
            }
        })
        .collect()
}

fn evac_scenario(
    rng: &mut ChaCha8Rng,
    name: String,
    world: BenchmarkWorld,
) -> Result<Scenario, GenError> {
    let starts = sample_spread(
        rng,
        &world.spawn,
        world.agents,
        0.9,
        &world.config.polygons,
        DEFAULT_RADIUS + 0.1,
        "agent start",
    )?;
    let tasks = starts
        .into_iter()
        .enumerate()
        .map(|(i, start)| task(i as u32, start, sample_in(rng, &world.goal)))
        .collect();
    Ok(Scenario {
        name,
        config: world.config,
        tasks,
    })
}

fn concentric_scenario(rng: &mut ChaCha8Rng, name: String) -> Result<Scenario, GenError> {
    let center = Vec2::new(8.0, 8.0);
    let radius = 6.0;
    let agents = 20;
    let rotation = rng.random_range(0.0..std::f64::consts::TAU);
    let tasks = (0..agents)
        .map(|i| {
            let jitter = rng.random_range(-0.05..0.05);
            let angle = rotation + std::f64::consts::TAU * i as f64 / agents as f64 + jitter;
            let start = center + Vec2::new(angle.cos(), angle.sin()) * radius;
            // Goal is exactly antipodal on the circle.
            let goal = center + (center - start);
            task(i as u32, start, goal)
        })
        .collect();
    Ok(Scenario {
        name,
        config: ObstacleConfig {
            label: "concentric".into(),
            bounds: Rect::new(0.0, 0.0, 16.0, 16.0),
            polygons: vec![],
        },
        tasks,
    })
}

fn hallway2_scenario(rng: &mut ChaCha8Rng, name: String) -> Result<Scenario, GenError> {
    let polygons = vec![
        rect_poly(0.5, 0.5, 29.5, 1.0),
        rect_poly(0.5, 17.0, 29.5, 17.5),
    ];
    let west = Rect::new(1.5, 2.0, 5.5, 16.0);
    let east = Rect::new(24.5, 2.0, 28.5, 16.0);
    let half = 15usize;
    let west_starts = sample_spread(rng, &west, half, 0.9, &polygons, 0.4, "agent start")?;
    let east_starts = sample_spread(rng, &east, half, 0.9, &polygons, 0.4, "agent start")?;
    let mut tasks = Vec::with_capacity(2 * half);
    for (i, start) in west_starts.into_iter().enumerate() {
        tasks.push(task(i as u32, start, sample_in(rng, &east)));
    }
    for (i, start) in east_starts.into_iter().enumerate() {
        tasks.push(task((half + i) as u32, start, sample_in(rng, &west)));
    }
    Ok(Scenario {
        name,
        config: ObstacleConfig {
            label: "hallway2".into(),
            bounds: Rect::new(0.0, 0.0, 30.0, 18.0),
            polygons,
        },
        tasks,
    })
}

fn hallway4_scenario(rng: &mut ChaCha8Rng, name: String) -> Result<Scenario, GenError> {
    // Two 16 m wide hallways crossing; four corner blocks.
    let polygons = vec![
        rect_poly(0.5, 0.5, 4.0, 4.0),
        rect_poly(20.0, 0.5, 23.5, 4.0),
        rect_poly(20.0, 20.0, 23.5, 23.5),
        rect_poly(0.5, 20.0, 4.0, 23.5),
    ];
    let arms = [
        Rect::new(1.0, 5.5, 3.5, 18.5),   // west
        Rect::new(20.5, 5.5, 23.0, 18.5), // east
        Rect::new(5.5, 1.0, 18.5, 3.5),   // south
        Rect::new(5.5, 20.5, 18.5, 23.0), // north
    ];
    let per_arm = 8usize;
    let mut tasks = Vec::with_capacity(4 * per_arm);
    for (arm_idx, arm) in arms.iter().enumerate() {
        let starts = sample_spread(rng, arm, per_arm, 0.9, &polygons, 0.4, "agent start")?;
        for (i, start) in starts.into_iter().enumerate() {
            // Travel to one of the three other arms.
            let other = (arm_idx + rng.random_range(1..4)) % 4;
            let goal = sample_in(rng, &arms[other]);
            tasks.push(task((arm_idx * per_arm + i) as u32, start, goal));
        }
    }
    Ok(Scenario {
        name,
        config: ObstacleConfig {
            label: "hallway4".into(),
            bounds: Rect::new(0.0, 0.0, 24.0, 24.0),
            polygons,
        },
        tasks,
    })
}

/// Parameters of the uniform random world generator.
#[derive(Debug, Clone)]
pub struct EgrdParams {
    pub n_agents: usize,
    pub obstacle_count: usize,
    pub bounds: Rect,
}

impl Default for EgrdParams {
    fn default() -> Self {
        EgrdParams {
            n_agents: 25,
            obstacle_count: 10,
            bounds: Rect::new(0.0, 0.0, 20.0, 20.0),
        }
    }
}

/// Generates scenarios with uniformly placed unit-square obstacles and
/// uniformly placed, collision-free start/goal pairs. Every scenario gets a
/// unique configuration label.
pub fn gen_egrd(seed: u64, count: usize, params: &EgrdParams) -> Result<Vec<Scenario>, GenError> {
    if count == 0 {
        return Err(GenError::ZeroCount);
    }
    (0..count)
        .map(|index| {
            let mut rng = ChaCha8Rng::seed_from_u64(mix_seed(seed, 0x5000 + index as u64));
            let b = params.bounds;
            let polygons: Vec<Polygon> = (0..params.obstacle_count)
                .map(|_| {
                    let x = rng.random_range(b.min.x + 0.5..b.max.x - 1.5);
                    let y = rng.random_range(b.min.y + 0.5..b.max.y - 1.5);
                    rect_poly(x, y, x + 1.0, y + 1.0)
                })
                .collect();
            let inner = Rect::new(b.min.x + 0.5, b.min.y + 0.5, b.max.x - 0.5, b.max.y - 0.5);
            let starts = sample_spread(
                &mut rng,
                &inner,
                params.n_agents,
                0.7,
                &polygons,
                DEFAULT_RADIUS + 0.1,
                "agent start",
            )?;
            let mut tasks = Vec::with_capacity(params.n_agents);
            for (i, start) in starts.into_iter().enumerate() {
                const MAX_ATTEMPTS: u32 = 20_000;
                let mut attempts = 0;
                let goal = loop {
                    attempts += 1;
                    if attempts > MAX_ATTEMPTS {
                        return Err(GenError::PlacementFailed {
                            what: "agent goal",
                            attempts: MAX_ATTEMPTS,
                        });
                    }
                    let g = sample_in(&mut rng, &inner);
                    let clear = polygons
                        .iter()
                        .all(|poly| geom::dist_point_polygon(g, poly) >= DEFAULT_RADIUS + 0.1);
                    if clear && g.dist(start) >= 1.0 {
                        break g;
                    }
                };
                tasks.push(task(i as u32, start, goal));
            }
            Ok(Scenario {
                name: format!("egrd-s{}-{:03}", seed, index),
                config: ObstacleConfig {
                    label: format!("egrd-s{}-{:03}", seed, index),
                    bounds: b,
                    polygons,
                },
                tasks,
            })
        })
        .collect()
}

/// Returns the designed (scenario 1, scenario 2) pair for a hypothesis test.
pub fn gen_hypothesis(test: HypothesisTest) -> (Scenario, Scenario) {
    match test {
        HypothesisTest::TemporalAccumulation => temporal_accumulation_pair(),
        HypothesisTest::ConsequentInteraction => consequent_interaction_pair(),
        HypothesisTest::MovementDirection => movement_direction_pair(),
    }
}

fn open_config(label: &str, bounds: Rect) -> ObstacleConfig {
    ObstacleConfig {
        label: label.into(),
        bounds,
        polygons: vec![],
    }
}

fn temporal_accumulation_pair() -> (Scenario, Scenario) {
    let bounds = Rect::new(0.0, 0.0, 24.0, 10.0);
    // Scenario 1: two agents travel side by side, 1.2 m apart.
    let s1 = Scenario {
        name: "temporal_accumulation-1".into(),
        config: open_config("temporal_accumulation-1", bounds),
        tasks: vec![
            task(0, Vec2::new(2.0, 4.4), Vec2::new(22.0, 4.4)),
            task(1, Vec2::new(2.0, 5.6), Vec2::new(22.0, 5.6)),
        ],
    };
    // Scenario 2: the same two agents head on, swapping positions.
    let s2 = Scenario {
        name: "temporal_accumulation-2".into(),
        config: open_config("temporal_accumulation-2", bounds),
        tasks: vec![
            task(0, Vec2::new(2.0, 5.0), Vec2::new(22.0, 5.0)),
            task(1, Vec2::new(22.0, 5.0), Vec2::new(2.0, 5.0)),
        ],
    };
    (s1, s2)
}

fn consequent_interaction_pair() -> (Scenario, Scenario) {
    let bounds = Rect::new(0.0, 0.0, 24.0, 12.0);
    let xi = task(0, Vec2::new(1.5, 6.0), Vec2::new(22.5, 6.0));
    // Scenario 1: the other agents queue single file on the same line,
    // all moving toward the left.
    let mut tasks1 = vec![xi.clone()];
    for (i, x) in [9.0, 11.0, 13.0, 15.0].into_iter().enumerate() {
        tasks1.push(task(
            (i + 1) as u32,
            Vec2::new(x, 6.0),
            Vec2::new(1.5, 6.0),
        ));
    }
    let s1 = Scenario {
        name: "consequent_interaction-1".into(),
        config: open_config("consequent_interaction-1", bounds),
        tasks: tasks1,
    };
    // Scenario 2: the other agents open into a V; each targets the left
    // edge at its own horizontal level.
    let mut tasks2 = vec![xi];
    for (i, (x, y)) in [(9.5, 6.9), (9.5, 5.1), (11.5, 8.7), (11.5, 3.3)]
        .into_iter()
        .enumerate()
    {
        tasks2.push(task((i + 1) as u32, Vec2::new(x, y), Vec2::new(1.5, y)));
    }
    let s2 = Scenario {
        name: "consequent_interaction-2".into(),
        config: open_config("consequent_interaction-2", bounds),
        tasks: tasks2,
    };
    (s1, s2)
}

fn movement_direction_pair() -> (Scenario, Scenario) {
    let bounds = Rect::new(0.0, 0.0, 16.0, 16.0);
    let center = Vec2::new(8.0, 8.0);
    let inner = 1.6;
    let outer = 6.4;
    let angles: Vec<f64> = (0..6)
        .map(|k| std::f64::consts::TAU * k as f64 / 6.0 + 15f64.to_radians())
        .collect();
    let point = |r: f64, a: f64| center + Vec2::new(a.cos(), a.sin()) * r;
    // Scenario 1: six agents packed on the inner hexagon move outward.
    let tasks1 = angles
        .iter()
        .enumerate()
        .map(|(i, &a)| task(i as u32, point(inner, a), point(outer, a)))
        .collect();
    // Scenario 2: the same six agents move inward instead.
    let tasks2 = angles
        .iter()
        .enumerate()
        .map(|(i, &a)| task(i as u32, point(outer, a), point(inner, a)))
        .collect();
    let s1 = Scenario {
        name: "movement_direction-1".into(),
        config: open_config("movement_direction-1", bounds),
        tasks: tasks1,
    };
    let s2 = Scenario {
        name: "movement_direction-2".into(),
        config: open_config("movement_direction-2", bounds),
        tasks: tasks2,
    };
    (s1, s2)
}

/// One scenario per gap width: two wall blocks separated horizontally by
/// the gap, one agent crossing diagonally against three others. The task
/// list is identical across gaps; only the obstacles move.
pub fn gen_gap_study(gaps: &[f64]) -> Result<Vec<Scenario>, GenError> {
    let tasks = vec![
        task(0, Vec2::new(2.5, 2.5), Vec2::new(17.5, 13.5)),
        task(1, Vec2::new(16.0, 13.0), Vec2::new(3.0, 2.0)),
        task(2, Vec2::new(17.5, 12.5), Vec2::new(2.0, 3.5)),
        task(3, Vec2::new(15.0, 14.0), Vec2::new(4.5, 1.5)),
    ];
    gaps.iter()
        .map(|&gap| {
            if gap < 2.0 * DEFAULT_RADIUS {
                return Err(GenError::GapTooSmall(gap));
            }
            let polygons = vec![
                rect_poly(0.0, 7.0, 10.0 - gap / 2.0, 9.0),
                rect_poly(10.0 + gap / 2.0, 7.0, 20.0, 9.0),
            ];
            Ok(Scenario {
                name: format!("gap-{:.1}", gap),
                config: ObstacleConfig {
                    label: format!("gap-{:.1}", gap),
                    bounds: Rect::new(0.0, 0.0, 20.0, 16.0),
                    polygons,
                },
                tasks: tasks.clone(),
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scene::save_scenario;

    #[test]
    fn exsd_counts_and_geometry() {
        let evac2 = gen_exsd(Benchmark::Evac2, 1, 1).unwrap();
        assert_eq!(evac2[0].tasks.len(), 30);
        // Doorway gap between the two right-wall segments is 1.4 m.
        let polys = &evac2[0].config.polygons;
        let below_top = polys[3].iter().map(|v| v.y).fold(f64::MIN, f64::max);
        let above_bottom = polys[4].iter().map(|v| v.y).fold(f64::MAX, f64::min);
        assert!((above_bottom - below_top - 1.4).abs() < 1e-12);

        let conc = gen_exsd(Benchmark::Concentric, 9, 1).unwrap();
        assert_eq!(conc[0].tasks.len(), 20);
        let center = Vec2::new(8.0, 8.0);
        for t in &conc[0].tasks {
            let antipode = center + (center - t.start);
            assert!(t.goal.dist(antipode) < 1e-9);
        }
    }

    #[test]
    fn generators_are_deterministic() {
        for bench in Benchmark::ALL {
            let a = gen_exsd(bench, 42, 2).unwrap();
            let b = gen_exsd(bench, 42, 2).unwrap();
            for (x, y) in a.iter().zip(&b) {
                assert_eq!(save_scenario(x), save_scenario(y));
            }
        }
        let a = gen_egrd(7, 3, &EgrdParams::default()).unwrap();
        let b = gen_egrd(7, 3, &EgrdParams::default()).unwrap();
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(save_scenario(x), save_scenario(y));
        }
    }

    #[test]
    fn generated_scenarios_validate() {
        for bench in Benchmark::ALL {
            for s in gen_exsd(bench, 3, 2).unwrap() {
                s.validate().unwrap_or_else(|e| panic!("{}: {e}", s.name));
            }
        }
        for s in gen_egrd(3, 3, &EgrdParams::default()).unwrap() {
            s.validate().unwrap();
        }
        for t in HypothesisTest::ALL {
            let (s1, s2) = gen_hypothesis(t);
            s1.validate().unwrap();
            s2.validate().unwrap();
        }
        for s in gen_gap_study(&[3.0, 6.0, 10.0]).unwrap() {
            s.validate().unwrap();
        }
    }

    #[test]
    fn egrd_labels_are_unique() {
        let scenarios = gen_egrd(11, 20, &EgrdParams::default()).unwrap();
        let labels: std::collections::HashSet<_> =
            scenarios.iter().map(|s| s.config.label.clone()).collect();
        assert_eq!(labels.len(), scenarios.len());
    }

    #[test]
    fn egrd_open_space_has_agent_count() {
        let params = EgrdParams {
            obstacle_count: 0,
            ..EgrdParams::default()
        };
        let scenarios = gen_egrd(5, 1, &params).unwrap();
        assert_eq!(scenarios[0].tasks.len(), 25);
        assert!(scenarios[0].config.polygons.is_empty());
    }

    #[test]
    fn hypothesis_shapes() {
        let (s1, s2) = gen_hypothesis(HypothesisTest::TemporalAccumulation);
        assert_eq!(s1.tasks.len(), 2);
        assert_eq!(s2.tasks.len(), 2);

        let (s1, s2) = gen_hypothesis(HypothesisTest::MovementDirection);
        assert_eq!(s1.tasks.len(), 6);
        assert_eq!(s2.tasks.len(), 6);
        // Scenario 2 starts where scenario 1 ends and vice versa.
        for (a, b) in s1.tasks.iter().zip(&s2.tasks) {
            assert!(a.start.dist(b.goal) < 1e-12);
            assert!(a.goal.dist(b.start) < 1e-12);
        }

        let (_, s2) = gen_hypothesis(HypothesisTest::ConsequentInteraction);
        // V formation: distinct y per flanking agent, x grows with |y - 6|.
        let flank: Vec<_> = s2.tasks.iter().skip(1).collect();
        let mut ys: Vec<f64> = flank.iter().map(|t| t.start.y).collect();
        ys.sort_by(f64::total_cmp);
        ys.dedup();
        assert_eq!(ys.len(), 4);
        for a in &flank {
            for b in &flank {
                if (a.start.y - 6.0).abs() < (b.start.y - 6.0).abs() {
                    assert!(a.start.x <= b.start.x);
                }
            }
        }
    }

    #[test]
    fn gap_study_fixed_tasks() {
        let scenarios = gen_gap_study(&[3.0, 6.0, 10.0]).unwrap();
        assert_eq!(scenarios.len(), 3);
        for s in &scenarios {
            assert_eq!(s.tasks.len(), 4);
            assert_eq!(s.tasks, scenarios[0].tasks);
        }
        let twice = gen_gap_study(&[5.0, 5.0]).unwrap();
        assert_eq!(
            save_scenario(&twice[0]).replace("gap-5.0", "g"),
            save_scenario(&twice[1]).replace("gap-5.0", "g")
        );
        assert!(gen_gap_study(&[0.1]).is_err());
    }
}
