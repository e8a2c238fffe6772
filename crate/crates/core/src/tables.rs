//! The accuracy benchmark grids.
//!
//! Two grids are produced. The first compares the five families
//! Stirling, Laplace, Ramanujan, Mortici and the shifted series ("New")
//! at orders one through eight; the Stirling row only has even-order
//! entries. The second covers the even-power series ("Special") at orders
//! 2, 4, ..., 10. Both run at `x` in {100, 1000, 10000}.
//!
//! Cells are evaluated sequentially in a fixed order, so output is
//! deterministic for a given precision context.

use crate::eval::{edd, ApproximationSpec, EddResult, EvalError, Family, PrecisionContext, Sign};
use crate::exact::rat_int;

/// Arguments both grids are evaluated at.
pub const TABLE_ARGUMENTS: [u64; 3] = [100, 1000, 10000];

/// Column orders of the first grid.
pub const TABLE1_ORDERS: [usize; 8] = [1, 2, 3, 4, 5, 6, 7, 8];

/// Row families of the first grid, in display order.
pub const TABLE1_FAMILIES: [Family; 5] = [
    Family::Stirling,
    Family::Laplace,
    Family::Ramanujan,
    Family::Mortici,
    Family::NemesShifted,
];

/// Column orders of the second grid.
pub const TABLE2_ORDERS: [usize; 5] = [2, 4, 6, 8, 10];

/// One populated cell: the unrounded digit count, the sign, and the
/// one-decimal display string.
#[derive(Clone, Debug)]
pub struct EddCell {
    pub edd: f64,
    pub sign: Sign,
    pub display: String,
}

impl EddCell {
    fn from_result(result: &EddResult) -> Self {
        EddCell {
            edd: result.to_f64(),
            sign: result.sign(),
            display: result.display_one_decimal(),
        }
    }
}

/// One grid row: a family at one argument, with one entry per column
/// (`None` where the family has no term of that order).
#[derive(Clone, Debug)]
pub struct TableRow {
    pub family: Family,
    pub x: u64,
    pub cells: Vec<Option<EddCell>>,
}

/// The full first grid, grouped by argument as displayed: for each `x`,
/// one row per family.
pub fn table1(ctx: &PrecisionContext) -> Result<Vec<TableRow>, EvalError> {
    let mut rows = Vec::new();
    for &x in &TABLE_ARGUMENTS {
        for family in TABLE1_FAMILIES {
            let mut cells = Vec::with_capacity(TABLE1_ORDERS.len());
            for &order in &TABLE1_ORDERS {
                if family == Family::Stirling && order % 2 != 0 {
                    cells.push(None);
                    continue;
                }
                let spec = ApproximationSpec::new(family, order)?;
                let result = edd(&spec, &rat_int(x as i64), ctx)?;
                cells.push(Some(EddCell::from_result(&result)));
            }
            rows.push(TableRow { family, x, cells });
        }
    }
    Ok(rows)
}

/// The full second grid: one row per argument for the even-power series.
pub fn table2(ctx: &PrecisionContext) -> Result<Vec<TableRow>, EvalError> {
    let mut rows = Vec::new();
    for &x in &TABLE_ARGUMENTS {
        let mut cells = Vec::with_capacity(TABLE2_ORDERS.len());
        for &order in &TABLE2_ORDERS {
            let spec = ApproximationSpec::new(Family::NemesEven, order)?;
            let result = edd(&spec, &rat_int(x as i64), ctx)?;
            cells.push(Some(EddCell::from_result(&result)));
        }
        rows.push(TableRow {
            family: Family::NemesEven,
            x,
            cells,
        });
    }
    Ok(rows)
}
