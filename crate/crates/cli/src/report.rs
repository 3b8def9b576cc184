//! The report document written to standard output.

use affine_endo::{AffinePlane, IncidencePlane};
use serde::Serialize;
use serde_json::Value;

pub const TOOL_VERSION: &str = concat!(env!("CARGO_PKG_NAME"), " ", env!("CARGO_PKG_VERSION"));

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Error,
}

impl Status {
    pub fn exit_code(self) -> u8 {
        match self {
            Status::Pass => 0,
            Status::Fail => 1,
            Status::Error => 2,
        }
    }

    pub fn from_passed(passed: bool) -> Self {
        if passed {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct PlaneSummary {
    pub points: usize,
    pub lines: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub order: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub directions: Option<usize>,
}

impl PlaneSummary {
    pub fn unverified(plane: &IncidencePlane) -> Self {
        Self {
            points: plane.num_points(),
            lines: plane.num_lines(),
            order: None,
            directions: None,
        }
    }

    pub fn verified(plane: &AffinePlane) -> Self {
        Self {
            points: plane.num_points(),
            lines: plane.num_lines(),
            order: Some(plane.order()),
            directions: Some(plane.partition().num_classes()),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ReportDocument {
    pub tool_version: &'static str,
    pub command: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub plane_summary: Option<PlaneSummary>,
    pub results: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    pub status: Status,
}

impl ReportDocument {
    pub fn new(
        command: &'static str,
        plane_summary: Option<PlaneSummary>,
        results: Value,
        status: Status,
    ) -> Self {
        Self {
            tool_version: TOOL_VERSION,
            command,
            plane_summary,
            results,
            error: None,
            status,
        }
    }

    pub fn error(
        command: &'static str,
        plane_summary: Option<PlaneSummary>,
        message: impl Into<String>,
    ) -> Self {
        Self {
            tool_version: TOOL_VERSION,
            command,
            plane_summary,
            results: Value::Null,
            error: Some(message.into()),
            status: Status::Error,
        }
    }

    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("report serializes");
        text.push('\n');
        text
    }
}

pub fn to_value<T: Serialize>(value: &T) -> Value {
    serde_json::to_value(value).expect("report payload serializes")
}
