//! Scenario data model, validation, canonical file format and the
//! deterministic scenario generators.
//!
//! A scenario bundles an obstacle configuration (a labeled set of simple
//! polygons inside rectangular world bounds) with the navigation tasks of
//! all agents. Scenarios are the unit of scoring; a named collection of
//! scenarios forms a domain sample.

mod generators;

pub use generators::{
    gen_egrd, gen_exsd, gen_gap_study, gen_hypothesis, Benchmark, EgrdParams, GenError,
    HypothesisTest,
};

use crate::geom::{self, Polygon, Rect, Vec2};
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub const DEFAULT_RADIUS: f64 = 0.3;
pub const DEFAULT_MAX_STEPS: u32 = 2000;

/// A labeled obstacle configuration: simple polygons inside world bounds.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ObstacleConfig {
    pub label: String,
    pub bounds: Rect,
    pub polygons: Vec<Polygon>,
}

/// One agent's navigation task.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Task {
    pub id: u32,
    pub start: Vec2,
    pub goal: Vec2,
    #[serde(default)]
    pub start_time: f64,
    #[serde(default = "default_max_steps")]
    pub max_steps: u32,
    #[serde(default = "default_radius")]
    pub radius: f64,
}

fn default_max_steps() -> u32 {
    DEFAULT_MAX_STEPS
}

fn default_radius() -> f64 {
    DEFAULT_RADIUS
}

/// An obstacle configuration plus the tasks of all agents.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Scenario {
    pub name: String,
    pub config: ObstacleConfig,
    pub tasks: Vec<Task>,
}

/// A named collection of scenarios; the sample of a scenario domain.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DomainSample {
    pub name: String,
    pub scenarios: Vec<Scenario>,
}

#[derive(Debug, Error)]
pub enum SceneError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Validation(#[from] ValidationError),
}

#[derive(Debug, Error)]
pub enum ValidationError {
    #[error("config label is empty")]
    EmptyLabel,
    #[error("bounds are degenerate (max must exceed min)")]
    BadBounds,
    #[error("scenario has no tasks")]
    NoTasks,
    #[error("polygon {index}: {reason}")]
    BadPolygon { index: usize, reason: String },
    #[error("duplicate task id {id}")]
    DuplicateTaskId { id: u32 },
    #[error("task {id}: field `{field}` {reason}")]
    BadTaskField {
        id: u32,
        field: &'static str,
        reason: String,
    },
    #[error("task {id}: `{field}` lies inside obstacle polygon {polygon} (inflated by radius)")]
    TaskInObstacle {
        id: u32,
        field: &'static str,
        polygon: usize,
    },
    #[error("task {id}: `{field}` outside world bounds (inflated by radius)")]
    TaskOutOfBounds { id: u32, field: &'static str },
    #[error("tasks {first} and {second} share the same start position and start time")]
    CoincidentStarts { first: u32, second: u32 },
}

impl Scenario {
    /// Canonical form: tasks sorted by id, polygons counterclockwise.
    pub fn canonicalize(&mut self) {
        self.tasks.sort_by_key(|t| t.id);
        for poly in &mut self.config.polygons {
            if geom::polygon_signed_area(poly) < 0.0 {
                poly.reverse();
            }
        }
    }

    pub fn validate(&self) -> Result<(), ValidationError> {
        let config = &self.config;
        if config.label.is_empty() {
            return Err(ValidationError::EmptyLabel);
        }
        if !(config.bounds.width() > 0.0 && config.bounds.height() > 0.0) {
            return Err(ValidationError::BadBounds);
        }
        for (index, poly) in config.polygons.iter().enumerate() {
            if poly.len() < 3 {
                return Err(ValidationError::BadPolygon {
                    index,
                    reason: format!("has {} vertices, need at least 3", poly.len()),
                });
            }
            if poly.iter().any(|v| !v.is_finite()) {
                return Err(ValidationError::BadPolygon {
                    index,
                    reason: "has non-finite vertices".into(),
                });
            }
            if !geom::polygon_is_simple(poly) {
                return Err(ValidationError::BadPolygon {
                    index,
                    reason: "is self-intersecting or degenerate".into(),
                });
            }
            if geom::polygon_signed_area(poly) <= 0.0 {
                return Err(ValidationError::BadPolygon {
                    index,
                    reason: "vertices must be in counterclockwise order".into(),
                });
            }
            if poly.iter().any(|&v| !config.bounds.contains(v)) {
                return Err(ValidationError::BadPolygon {
                    index,
                    reason: "extends outside world bounds".into(),
                });
            }
        }
        if self.tasks.is_empty() {
            return Err(ValidationError::NoTasks);
        }
        let mut ids = std::collections::HashSet::new();
        for task in &self.tasks {
            if !ids.insert(task.id) {
                return Err(ValidationError::DuplicateTaskId { id: task.id });
            }
            task.validate(config)?;
        }
        for (a, b) in pairs(&self.tasks) {
            if a.start == b.start && a.start_time == b.start_time {
                return Err(ValidationError::CoincidentStarts {
                    first: a.id,
                    second: b.id,
                });
            }
        }
        Ok(())
    }
}

impl Task {
    fn validate(&self, config: &ObstacleConfig) -> Result<(), ValidationError> {
        let field_err = |field, reason: &str| ValidationError::BadTaskField {
            id: self.id,
            field,
            reason: reason.into(),
        };
        if !self.start.is_finite() {
            return Err(field_err("start", "must be finite"));
        }
        if !self.goal.is_finite() {
            return Err(field_err("goal", "must be finite"));
        }
        if !(self.radius > 0.0) || !self.radius.is_finite() {
            return Err(field_err("radius", "must be positive"));
        }
        if !(self.start_time >= 0.0) || !self.start_time.is_finite() {
            return Err(field_err("start_time", "must be non-negative"));
        }
        if self.max_steps == 0 {
            return Err(field_err("max_steps", "must be positive"));
        }
        if self.start.dist(self.goal) <= 1e-9 {
            return Err(field_err("goal", "must differ from start"));
        }
        for (field, point) in [("start", self.start), ("goal", self.goal)] {
            // Inflate by the agent radius, with a hair of slack so exact
            // tangency still validates.
            let inset = self.radius - 1e-9;
            let b = &config.bounds;
            if point.x < b.min.x + inset
                || point.x > b.max.x - inset
                || point.y < b.min.y + inset
                || point.y > b.max.y - inset
            {
                return Err(ValidationError::TaskOutOfBounds { id: self.id, field });
            }
            for (polygon, poly) in config.polygons.iter().enumerate() {
                if geom::dist_point_polygon(point, poly) < inset {
                    return Err(ValidationError::TaskInObstacle {
                        id: self.id,
                        field,
                        polygon,
                    });
                }
            }
        }
        Ok(())
    }
}

fn pairs<T>(items: &[T]) -> impl Iterator<Item = (&T, &T)> {
    items
        .iter()
        .enumerate()
        .flat_map(move |(i, a)| items[i + 1..].iter().map(move |b| (a, b)))
}

/// Parses and validates a scenario document, returning its canonical form.
pub fn load_scenario(text: &str) -> Result<Scenario, SceneError> {
    let mut scenario: Scenario =
        serde_json::from_str(text).map_err(|e| SceneError::Parse(e.to_string()))?;
    scenario.canonicalize();
    scenario.validate()?;
    Ok(scenario)
}

/// Canonical serialization: tasks in id order, fixed field order, shortest
/// round-trip decimals. Byte-deterministic for equal scenarios.
pub fn save_scenario(scenario: &Scenario) -> String {
    let mut canonical = scenario.clone();
    canonical.canonicalize();
    let mut text = serde_json::to_string_pretty(&canonical).expect("scenario serializes");
    text.push('\n');
    text
}

#[cfg(test)]
mod tests {
    use super::*;

    fn minimal_doc() -> &'static str {
        r#"{
            "name": "min",
            "config": {"label": "open", "bounds": [0, 0, 10, 10], "polygons": []},
            "tasks": [{"id": 0, "start": [1, 1], "goal": [9, 9]}]
        }"#
    }

    #[test]
    fn minimal_document_loads() {
        let s = load_scenario(minimal_doc()).unwrap();
        assert_eq!(s.tasks.len(), 1);
        assert_eq!(s.tasks[0].radius, DEFAULT_RADIUS);
        assert_eq!(s.tasks[0].max_steps, DEFAULT_MAX_STEPS);
        assert_eq!(s.tasks[0].start_time, 0.0);
    }

    #[test]
    fn save_is_canonical_and_deterministic() {
        let mut s = load_scenario(minimal_doc()).unwrap();
        s.tasks.push(Task {
            id: 7,
            start: Vec2::new(2.0, 2.0),
            goal: Vec2::new(8.0, 2.0),
            start_time: 0.0,
            max_steps: 100,
            radius: 0.3,
        });
        // Deliberately out of id order.
        s.tasks.swap(0, 1);
        let a = save_scenario(&s);
        let b = save_scenario(&s);
        assert_eq!(a, b);
        let reloaded = load_scenario(&a).unwrap();
        assert_eq!(reloaded.tasks[0].id, 0);
        assert_eq!(reloaded.tasks[1].id, 7);
    }

    #[test]
    fn round_trip_identity() {
        let s = load_scenario(minimal_doc()).unwrap();
        let text = save_scenario(&s);
        let s2 = load_scenario(&text).unwrap();
        assert_eq!(s, s2);
        assert_eq!(text, save_scenario(&s2));
    }

    #[test]
    fn task_inside_obstacle_is_named() {
        let doc = r#"{
            "name": "bad",
            "config": {"label": "box", "bounds": [0, 0, 10, 10],
                       "polygons": [[[4, 4], [6, 4], [6, 6], [4, 6]]]},
            "tasks": [{"id": 3, "start": [5, 5], "goal": [9, 9]}]
        }"#;
        let err = load_scenario(doc).unwrap_err();
        match err {
            SceneError::Validation(ValidationError::TaskInObstacle { id, field, .. }) => {
                assert_eq!(id, 3);
                assert_eq!(field, "start");
            }
            other => panic!("unexpected error: {other}"),
        }
    }

    #[test]
    fn coincident_starts_rejected() {
        let doc = r#"{
            "name": "dup",
            "config": {"label": "open", "bounds": [0, 0, 10, 10], "polygons": []},
            "tasks": [
                {"id": 0, "start": [1, 1], "goal": [9, 9]},
                {"id": 1, "start": [1, 1], "goal": [9, 1]}
            ]
        }"#;
        assert!(matches!(
            load_scenario(doc).unwrap_err(),
            SceneError::Validation(ValidationError::CoincidentStarts { .. })
        ));
    }

    #[test]
    fn clockwise_polygons_are_normalized_on_load() {
        let doc = r#"{
            "name": "cw",
            "config": {"label": "box", "bounds": [0, 0, 10, 10],
                       "polygons": [[[4, 6], [6, 6], [6, 4], [4, 4]]]},
            "tasks": [{"id": 0, "start": [1, 1], "goal": [9, 9]}]
        }"#;
        let s = load_scenario(doc).unwrap();
        assert!(crate::geom::polygon_signed_area(&s.config.polygons[0]) > 0.0);
    }
}
