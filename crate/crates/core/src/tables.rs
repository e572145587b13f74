//! Reference tables of lollipop energies, recomputed against embedded
//! golden values.
//!
//! Every cell is computed twice: from exact root isolation and from the
//! Coulson integral (the difference integral for difference cells).

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::charpoly::charpoly;
use crate::energy::{energy_coulson_poly, energy_diff_coulson_poly};
use crate::error::{Error, Result};
use crate::graph::make_lollipop;
use crate::roots::energy_of_poly;

/// Largest admissible gap between a computed value and a golden value
/// printed to five decimals.
pub const GOLDEN_TOLERANCE: f64 = 5e-5;

const TABLE1: &str = include_str!("../data/table1.csv");
const TABLE2: &str = include_str!("../data/table2.csv");
const TABLE3: &str = include_str!("../data/table3.csv");

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TableId {
    One,
    Two,
    Three,
}

impl TableId {
    pub const ALL: [TableId; 3] = [TableId::One, TableId::Two, TableId::Three];

    pub fn number(self) -> u8 {
        match self {
            TableId::One => 1,
            TableId::Two => 2,
            TableId::Three => 3,
        }
    }

    pub fn from_number(k: u8) -> Result<Self> {
        match k {
            1 => Ok(TableId::One),
            2 => Ok(TableId::Two),
            3 => Ok(TableId::Three),
            _ => Err(Error::InvalidParameters(format!("no table {k}; expected 1, 2 or 3"))),
        }
    }

    pub fn raw_csv(self) -> &'static str {
        match self {
            TableId::One => TABLE1,
            TableId::Two => TABLE2,
            TableId::Three => TABLE3,
        }
    }
}

impl fmt::Display for TableId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.number())
    }
}

/// What a cell holds, for lollipop `P_n^t` and cycle `C_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Quantity {
    /// `E(P_n^t) - E(P_n^6)`
    DiffToP6,
    /// `E(P_n^t)`
    Lollipop,
    /// `E(C_n)`
    Cycle,
}

impl Quantity {
    pub fn label(self, n: usize, t: usize) -> String {
        match self {
            Quantity::DiffToP6 => format!("E(P{n}^{t})-E(P{n}^6)"),
            Quantity::Lollipop => format!("E(P{n}^{t})"),
            Quantity::Cycle => format!("E(C{n})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GoldenCell {
    pub n: usize,
    pub t: usize,
    pub quantity: Quantity,
    pub golden: f64,
}

#[derive(Deserialize)]
struct DiffRow {
    n: usize,
    t: usize,
    value: f64,
}

#[derive(Deserialize)]
struct EnergyRow {
    n: usize,
    t: usize,
    lollipop: f64,
    cycle: f64,
}

fn read_rows<T: for<'de> Deserialize<'de>>(text: &str) -> Result<Vec<T>> {
    csv::ReaderBuilder::new()
        .comment(Some(b'#'))
        .from_reader(text.as_bytes())
        .deserialize()
        .collect::<std::result::Result<Vec<T>, _>>()
        .map_err(|e| Error::InvalidParameters(format!("golden data: {e}")))
}

/// The embedded golden cells of a table, in file order.
pub fn golden_cells(id: TableId) -> Result<Vec<GoldenCell>> {
    match id {
        TableId::One | TableId::Two => Ok(read_rows::<DiffRow>(id.raw_csv())?
            .into_iter()
            .map(|r| GoldenCell { n: r.n, t: r.t, quantity: Quantity::DiffToP6, golden: r.value })
            .collect()),
        TableId::Three => Ok(read_rows::<EnergyRow>(id.raw_csv())?
            .into_iter()
            .flat_map(|r| {
                [
                    GoldenCell { n: r.n, t: r.t, quantity: Quantity::Lollipop, golden: r.lollipop },
                    GoldenCell { n: r.n, t: r.t, quantity: Quantity::Cycle, golden: r.cycle },
                ]
            })
            .collect()),
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TableCell {
    pub n: usize,
    pub t: usize,
    pub quantity: Quantity,
    pub golden: f64,
    /// Exact-root value and its error radius.
    pub computed: f64,
    pub radius: f64,
    /// `computed - golden`
    pub deviation: f64,
    /// Coulson-route value and its error radius.
    pub coulson: f64,
    pub coulson_radius: f64,
}

impl TableCell {
    pub fn label(&self) -> String {
        self.quantity.label(self.n, self.t)
    }

    pub fn within_tolerance(&self) -> bool {
        self.deviation.abs() <= GOLDEN_TOLERANCE
    }

    /// Gap between the two routes.
    pub fn route_gap(&self) -> f64 {
        (self.computed - self.coulson).abs()
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TableReport {
    pub id: TableId,
    pub tolerance: f64,
    pub cells: Vec<TableCell>,
}

impl TableReport {
    pub fn max_deviation(&self) -> f64 {
        self.cells.iter().map(|c| c.deviation.abs()).fold(0.0, f64::max)
    }

    pub fn max_route_gap(&self) -> f64 {
        self.cells.iter().map(TableCell::route_gap).fold(0.0, f64::max)
    }

    pub fn mismatches(&self) -> Vec<&TableCell> {
        self.cells.iter().filter(|c| !c.within_tolerance()).collect()
    }

    pub fn passed(&self) -> bool {
        self.cells.iter().all(TableCell::within_tolerance)
    }
}

fn compute_cell(g: &GoldenCell, tol: f64) -> Result<TableCell> {
    let p = charpoly(&make_lollipop(g.n, g.t)?);
    let (exact, coulson) = match g.quantity {
        Quantity::DiffToP6 => {
            let p6 = charpoly(&make_lollipop(g.n, 6)?);
            let a = energy_of_poly(&p, tol / 2.0)?;
            let b = energy_of_poly(&p6, tol / 2.0)?;
            let exact = (a.value - b.value, a.radius + b.radius);
            let c = energy_diff_coulson_poly(&p, &p6, tol)?;
            (exact, (c.value, c.radius))
        }
        Quantity::Lollipop | Quantity::Cycle => {
            let p = if g.quantity == Quantity::Cycle { charpoly(&make_lollipop(g.n, g.n)?) } else { p };
            let e = energy_of_poly(&p, tol)?;
            let c = energy_coulson_poly(&p, tol)?;
            ((e.value, e.radius), (c.value, c.radius))
        }
    };
    Ok(TableCell {
        n: g.n,
        t: g.t,
        quantity: g.quantity,
        golden: g.golden,
        computed: exact.0,
        radius: exact.1,
        deviation: exact.0 - g.golden,
        coulson: coulson.0,
        coulson_radius: coulson.1,
    })
}

/// Recomputes every cell of a table at tolerance `tol`.
pub fn reproduce_table(id: TableId, tol: f64) -> Result<TableReport> {
    let golden = golden_cells(id)?;
    let cells = golden.par_iter().map(|g| compute_cell(g, tol)).collect::<Result<Vec<_>>>()?;
    Ok(TableReport { id, tolerance: GOLDEN_TOLERANCE, cells })
}
