//! The four reference squares, embedded verbatim.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::grid::{Grid, NaturalSquare};
use crate::params::TypeParams;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Fixture {
    pub name: &'static str,
    pub description: &'static str,
    pub square: NaturalSquare,
    pub params: TypeParams,
}

struct Source {
    name: &'static str,
    description: &'static str,
    csv: &'static str,
    p: usize,
}

const SOURCES: [Source; 4] = [
    Source {
        name: "figure1_franklin8",
        description: "Franklin's order-8 square",
        csv: include_str!("../fixtures/figure1_franklin8.csv"),
        p: 2,
    },
    Source {
        name: "figure2_mp8",
        description: "type-2 most-perfect square of order 8",
        csv: include_str!("../fixtures/figure2_mp8.csv"),
        p: 2,
    },
    Source {
        name: "figure2_mp9",
        description: "type-3 most-perfect square of order 9",
        csv: include_str!("../fixtures/figure2_mp9.csv"),
        p: 3,
    },
    Source {
        name: "sec14_franklin27",
        description: "pandiagonal type-3 Franklin square of order 27",
        csv: include_str!("../fixtures/sec14_franklin27.csv"),
        p: 3,
    },
];

pub fn fixture_names() -> impl Iterator<Item = &'static str> {
    SOURCES.iter().map(|s| s.name)
}

fn load(source: &Source) -> Fixture {
    let square = Grid::from_csv(source.csv)
        .and_then(NaturalSquare::new)
        .unwrap_or_else(|e| panic!("embedded fixture {} is malformed: {e}", source.name));
    let params = TypeParams::new(source.p, square.order())
        .unwrap_or_else(|e| panic!("embedded fixture {} has bad parameters: {e}", source.name));
    Fixture {
        name: source.name,
        description: source.description,
        square,
        params,
    }
}

pub fn builtin_fixtures() -> Vec<Fixture> {
    SOURCES.iter().map(load).collect()
}

pub fn fixture(name: &str) -> Result<Fixture> {
    SOURCES
        .iter()
        .find(|s| s.name == name)
        .map(load)
        .ok_or_else(|| {
            Error::InvalidParameter(format!(
                "unknown fixture {name:?} (available: {})",
                fixture_names().collect::<Vec<_>>().join(", ")
            ))
        })
}
