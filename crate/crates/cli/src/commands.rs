//! Command implementations: each builds an [`OutputDocument`] from the
//! library layers.

use anyhow::{anyhow, bail, Context, Result};
use num_traits::Signed;

use gamma_asymp::decimal::{decimal_fixed, parse_exact};
use gamma_asymp::eval::{
    bigfloat_decimal_fixed, bigfloat_decimal_sig, bigfloat_to_rational, edd, even_pairs_float,
    log_approximation, ApproximationSpec, Family, PrecisionContext, MAX_EXACT_PAIR_INDEX,
};
use gamma_asymp::exact::{rat, Rational};
use gamma_asymp::families::{
    central_binomial_coeffs, central_binomial_shifted, gosper_base_coeffs, karatsuba_coeffs,
    laplace_coeffs, mortici_coeffs, nemes_even_pairs, nemes_shifted_coeffs, ramanujan_coeffs,
    stirling_log_coeffs,
};
use gamma_asymp::tables::{table1, table2, TableRow, TABLE1_ORDERS, TABLE2_ORDERS};

use crate::output::{Cell, OutputDocument};

/// Settings shared by every command.
#[derive(Clone, Copy, Debug)]
pub struct CommonOpts {
    /// Working precision in decimal digits.
    pub precision: usize,
    /// Ceiling on user-supplied orders and pair indices.
    pub max_order: usize,
    /// Allow the float continuation of the pair recurrence past the exact
    /// range.
    pub float_pairs: bool,
}

impl CommonOpts {
    fn context(&self) -> Result<PrecisionContext> {
        PrecisionContext::with_working_digits(self.precision)
            .map_err(|e| anyhow!("--precision {}: {e}", self.precision))
    }

    fn check_order(&self, what: &str, value: usize) -> Result<()> {
        if value > self.max_order {
            bail!("{what} {value} exceeds --max-order {}", self.max_order);
        }
        Ok(())
    }
}

pub const COEFF_FAMILIES: [&str; 9] = [
    "laplace",
    "stirling_log",
    "ramanujan",
    "karatsuba",
    "mortici",
    "gosper_base",
    "nemes_shifted",
    "central_binomial",
    "central_binomial_shifted",
];

/// `coeffs <family> <order>`: exact coefficients with indices.
pub fn cmd_coeffs(family: &str, order: usize, opts: &CommonOpts) -> Result<OutputDocument> {
    opts.check_order("order", order)?;
    let coeffs: Vec<Rational> = match family {
        "laplace" => laplace_coeffs(order).coeffs().to_vec(),
        "stirling_log" => {
            if order < 1 {
                bail!("the logarithmic series needs order >= 1");
            }
            stirling_log_coeffs(order).coeffs().to_vec()
        }
        "ramanujan" => ramanujan_coeffs(order).coeffs().to_vec(),
        "karatsuba" => karatsuba_coeffs(order).coeffs().to_vec(),
        "mortici" => mortici_coeffs(order).coeffs().to_vec(),
        "gosper_base" => gosper_base_coeffs(order).coeffs().to_vec(),
        "nemes_shifted" => nemes_shifted_coeffs(order).coeffs().to_vec(),
        "central_binomial" => central_binomial_coeffs(order).coeffs().to_vec(),
        "central_binomial_shifted" => central_binomial_shifted(order).coeffs().to_vec(),
        other => bail!(
            "unknown coefficient family '{other}'; expected one of: {}",
            COEFF_FAMILIES.join(", ")
        ),
    };
    let mut doc = OutputDocument::new("coeffs");
    doc.param("family", family).param("order", order);
    doc.headers = vec!["n".into(), "coefficient".into()];
    doc.rows = coeffs
        .iter()
        .enumerate()
        .map(|(n, c)| vec![Cell::text(n.to_string()), Cell::exact(c)])
        .collect();
    if family == "karatsuba" {
        doc.notes
            .push("index n corresponds to the x^(3-n) term of the cubic-head radicand".into());
    }
    Ok(doc)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum PairMode {
    Exact,
    Decimal,
}

/// `pairs <max-index>`: the sequences `g_0..g_M` and `v_1..v_M`.
pub fn cmd_pairs(max_index: usize, mode: PairMode, opts: &CommonOpts) -> Result<OutputDocument> {
    opts.check_order("max index", max_index)?;
    let mut doc = OutputDocument::new("pairs");
    doc.param("max_index", max_index).param(
        "mode",
        match mode {
            PairMode::Exact => "exact",
            PairMode::Decimal => "decimal",
        },
    );
    doc.headers = vec!["n".into(), "g_n".into(), "v_n".into()];

    if max_index <= MAX_EXACT_PAIR_INDEX {
        let pairs = nemes_even_pairs(max_index).context("pair recurrence")?;
        for n in 0..=max_index {
            let g = pairs.g(n);
            let v = pairs.v(n).ok();
            doc.rows.push(match mode {
                PairMode::Exact => vec![
                    Cell::text(n.to_string()),
                    Cell::exact(g),
                    v.map(Cell::exact).unwrap_or(Cell::Empty),
                ],
                PairMode::Decimal => vec![
                    Cell::text(n.to_string()),
                    Cell::text(decimal_fixed(g, 15)),
                    v.map(|v| Cell::text(decimal_fixed(v, 15)))
                        .unwrap_or(Cell::Empty),
                ],
            });
        }
        return Ok(doc);
    }

    if mode == PairMode::Exact {
        bail!(
            "max index {max_index} is too large for exact mode (limit {MAX_EXACT_PAIR_INDEX}); \
             use --mode decimal with --float-pairs"
        );
    }
    if !opts.float_pairs {
        bail!(
            "max index {max_index} is beyond the exact range (limit {MAX_EXACT_PAIR_INDEX}); \
             pass --float-pairs to continue the recurrence in float arithmetic"
        );
    }
    let ctx = opts.context()?;
    let pairs = even_pairs_float(max_index, &ctx).context("float pair recurrence")?;
    for n in 0..=max_index {
        let g = bigfloat_decimal_fixed(pairs.g(n), 15).context("g is finite")?;
        let v = pairs
            .v(n)
            .map(|v| bigfloat_decimal_fixed(v, 15).context("v is finite"))
            .transpose()?;
        doc.rows.push(vec![
            Cell::text(n.to_string()),
            Cell::text(g),
            v.map(Cell::text).unwrap_or(Cell::Empty),
        ]);
    }
    Ok(doc)
}

fn table_doc(
    command: &str,
    orders: &[usize],
    rows: &[TableRow],
    opts: &CommonOpts,
) -> OutputDocument {
    let mut doc = OutputDocument::new(command);
    doc.param("precision", opts.precision);
    doc.headers = vec!["formula".into(), "x".into()];
    doc.headers
        .extend(orders.iter().map(|o| format!("({o})")));
    for row in rows {
        let mut cells = vec![
            Cell::text(row.family.label()),
            Cell::text(row.x.to_string()),
        ];
        cells.extend(row.cells.iter().map(|c| match c {
            Some(cell) => Cell::text(cell.display.clone()),
            None => Cell::Empty,
        }));
        doc.rows.push(cells);
    }
    doc
}

/// `table1`: the five-family accuracy grid at orders (1)..(8).
pub fn cmd_table1(opts: &CommonOpts) -> Result<OutputDocument> {
    let ctx = opts.context()?;
    let rows = table1(&ctx)?;
    Ok(table_doc("table1", &TABLE1_ORDERS, &rows, opts))
}

/// `table2`: the even-power series grid at orders (2),(4),...,(10).
pub fn cmd_table2(opts: &CommonOpts) -> Result<OutputDocument> {
    let ctx = opts.context()?;
    let rows = table2(&ctx)?;
    let mut doc = table_doc("table2", &TABLE2_ORDERS, &rows, opts);
    if let Some(cell) = rows
        .iter()
        .find(|r| r.x == 10000)
        .and_then(|r| r.cells.last().cloned().flatten())
    {
        doc.notes.push(format!(
            "the x=10000 order-(10) entry is {}{:.1}; its sign is reported as computed and \
             reference comparisons treat this cell as magnitude-only",
            cell.sign.prefix(),
            cell.edd
        ));
    }
    Ok(doc)
}

/// `conjecture <max-index>`: `v_m` and its distance to `1/4`.
pub fn cmd_conjecture(max_index: usize, digits: usize, opts: &CommonOpts) -> Result<OutputDocument> {
    if max_index < 2 {
        bail!("max index must be at least 2 to show the distance trend");
    }
    opts.check_order("max index", max_index)?;
    if digits == 0 {
        bail!("digits must be positive");
    }
    let mut doc = OutputDocument::new("conjecture");
    doc.param("max_index", max_index).param("digits", digits);
    doc.headers = vec!["m".into(), "v_m".into(), "|v_m - 1/4|".into()];
    let quarter = rat(1, 4);

    if max_index <= MAX_EXACT_PAIR_INDEX {
        let pairs = nemes_even_pairs(max_index).context("pair recurrence")?;
        for m in 1..=max_index {
            let v = pairs.v(m).expect("m >= 1");
            let dist = (v - &quarter).abs();
            doc.rows.push(vec![
                Cell::text(m.to_string()),
                Cell::text(decimal_fixed(v, digits)),
                Cell::text(decimal_fixed(&dist, digits)),
            ]);
        }
        return Ok(doc);
    }

    if !opts.float_pairs {
        bail!(
            "max index {max_index} is beyond the exact range (limit {MAX_EXACT_PAIR_INDEX}); \
             pass --float-pairs to continue the recurrence in float arithmetic"
        );
    }
    let ctx = opts.context()?;
    let pairs = even_pairs_float(max_index, &ctx).context("float pair recurrence")?;
    for m in 1..=max_index {
        let v = pairs.v(m).expect("m >= 1");
        // the float value is a dyadic rational, so the distance is exact
        let v_exact = bigfloat_to_rational(v).context("v is finite")?;
        let dist = (&v_exact - &quarter).abs();
        doc.rows.push(vec![
            Cell::text(m.to_string()),
            Cell::text(decimal_fixed(&v_exact, digits)),
            Cell::text(decimal_fixed(&dist, digits)),
        ]);
    }
    Ok(doc)
}

/// `eval <family> <order> <x>`: log-value, accuracy and sign of one cell.
pub fn cmd_eval(
    family: &str,
    order: usize,
    x: &str,
    digits: usize,
    opts: &CommonOpts,
) -> Result<OutputDocument> {
    let family = Family::parse(family).ok_or_else(|| {
        anyhow!(
            "unknown approximation family '{family}'; expected one of: \
             stirling, laplace, ramanujan, mortici, nemes_shifted, nemes_even"
        )
    })?;
    opts.check_order("order", order)?;
    if digits == 0 {
        bail!("digits must be positive");
    }
    let x_value = parse_exact(x)
        .ok_or_else(|| anyhow!("'{x}' is not an exactly representable number"))?;
    let ctx = opts.context()?;
    let spec = ApproximationSpec::new(family, order)?;
    let log_value = log_approximation(&spec, &x_value, &ctx)?;
    let result = edd(&spec, &x_value, &ctx)?;

    let mut doc = OutputDocument::new("eval");
    doc.param("family", family.name())
        .param("order", order)
        .param("x", x)
        .param("digits", digits)
        .param("precision", opts.precision);
    doc.headers = vec![
        "family".into(),
        "order".into(),
        "x".into(),
        "log_value".into(),
        "edd".into(),
        "sign".into(),
        "table_cell".into(),
    ];
    doc.rows.push(vec![
        Cell::text(family.name()),
        Cell::text(order.to_string()),
        Cell::text(x),
        Cell::text(bigfloat_decimal_sig(&log_value, digits).context("log value is finite")?),
        Cell::text(bigfloat_decimal_sig(result.value(), digits).context("edd is finite")?),
        Cell::text(result.sign().symbol()),
        Cell::text(result.display_one_decimal()),
    ]);
    Ok(doc)
}
