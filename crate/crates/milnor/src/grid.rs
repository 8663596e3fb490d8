//! Search grid files.
//!
//! ```toml
//! [grid]
//! directions = ["x^2", "x*y^2"]
//! coeffs = ["0", "1", "2"]
//! weights = [1, 2]
//! max_active = 2
//! ```

use std::sync::Arc;

use milnor_core::search::{parse_direction, SearchGrid};
use milnor_core::{Error, Rational, Ring};
use serde::Deserialize;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct GridFile {
    grid: GridTable,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct GridTable {
    directions: Vec<String>,
    coeffs: Vec<String>,
    weights: Vec<u32>,
    max_active: usize,
    budget: Option<u64>,
}

/// A parsed grid with the optional budget override from the file.
#[derive(Debug, Clone, PartialEq)]
pub struct GridSpec {
    pub grid: SearchGrid,
    pub budget: Option<u64>,
}

pub fn parse_grid(text: &str, ring: &Arc<Ring>) -> Result<GridSpec, Error> {
    let file: GridFile =
        toml::from_str(text).map_err(|e| Error::InvalidGrid(e.message().to_string()))?;
    let g = file.grid;
    let directions = g
        .directions
        .iter()
        .map(|d| parse_direction(ring, d))
        .collect::<Result<Vec<_>, _>>()?;
    let coefficients = g
        .coeffs
        .iter()
        .map(|c| {
            c.trim()
                .parse::<Rational>()
                .map_err(|_| Error::InvalidGrid(format!("coefficient {c:?} is not rational")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(GridSpec {
        grid: SearchGrid {
            directions,
            coefficients,
            weights: g.weights,
            max_active: g.max_active,
        },
        budget: g.budget,
    })
}
