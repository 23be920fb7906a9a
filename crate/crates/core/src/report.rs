//! The JSON shape shared by every command:
//! `{status, class, arcs | certificate, ordering?, representation?}`.

use serde::Serialize;
use serde_json::Value;

use crate::certificate::Certificate;
use crate::pog::{Ordering, Pog};
use crate::representation::Representation;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Yes,
    No,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub status: Status,
    pub class: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub arcs: Option<Vec<(String, String)>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ordering: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub representation: Option<Representation>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub violation: Option<Value>,
}

impl Report {
    pub fn yes(class: &str) -> Report {
        Report {
            status: Status::Yes,
            class: class.to_string(),
            arcs: None,
            certificate: None,
            ordering: None,
            representation: None,
            violation: None,
        }
    }

    pub fn no(class: &str) -> Report {
        Report { status: Status::No, ..Report::yes(class) }
    }

    pub fn with_arcs(mut self, d: &Pog) -> Report {
        self.arcs = Some(d.arcs().into_iter().map(|(u, v)| (d.name(u).to_string(), d.name(v).to_string())).collect());
        self
    }

    pub fn with_certificate(mut self, c: &Certificate, p: &Pog) -> Report {
        self.certificate = Some(c.to_json(p));
        self
    }

    pub fn with_ordering(mut self, o: &Ordering, p: &Pog) -> Report {
        self.ordering = Some(o.seq().iter().map(|&v| p.name(v).to_string()).collect());
        self
    }

    pub fn with_representation(mut self, r: Representation) -> Report {
        self.representation = Some(r);
        self
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shape() {
        let p = Pog::parse("arc a b").unwrap();
        let v: Value = serde_json::from_str(&Report::yes("lt").with_arcs(&p).to_json_string()).unwrap();
        assert_eq!(v, serde_json::json!({"status": "yes", "class": "lt", "arcs": [["a", "b"]]}));
    }
}
