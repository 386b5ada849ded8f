//! Table construction and rendering, plus canonical family enumeration.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use jacobi_stirling::exactmath::IntPoly;
use jacobi_stirling::models::{self, EnumBounds};
use jacobi_stirling::triangles::{
    build_central_even, build_central_odd, build_js_first, build_js_second, build_stirling,
    legendre_stirling, NumberKind,
};

/// A triangle ready for rendering: every cell is either a coefficient list
/// (polynomial kinds) or a single value, both as decimal strings so that
/// arbitrary precision survives any reader.
#[derive(Serialize, Deserialize, PartialEq, Eq, Debug)]
pub struct Table {
    pub kind: String,
    pub nmax: u32,
    pub rows: Vec<Vec<Cell>>,
}

#[derive(Serialize, Deserialize, PartialEq, Eq, Debug)]
#[serde(untagged)]
pub enum Cell {
    Value(String),
    Coeffs(Vec<String>),
}

fn poly_cell(p: &IntPoly) -> Cell {
    Cell::Coeffs(p.coeffs().iter().map(|c| c.to_string()).collect())
}

fn int_cell(v: &BigInt) -> Cell {
    Cell::Value(v.to_string())
}

/// Builds the requested triangle, or `None` for an unknown kind. Kinds are
/// case-sensitive: uppercase selects the second-kind family, lowercase the
/// first-kind one.
pub fn build_table(kind: &str, nmax: u32) -> Option<Table> {
    let rows: Vec<Vec<Cell>> = match kind {
        "JS" => build_js_second(nmax)
            .rows()
            .iter()
            .map(|row| row.iter().map(poly_cell).collect())
            .collect(),
        "js" => build_js_first(nmax)
            .rows()
            .iter()
            .map(|row| row.iter().map(poly_cell).collect())
            .collect(),
        "S" => int_rows(&build_stirling(NumberKind::Second, nmax)),
        "s" => int_rows(&build_stirling(NumberKind::First, nmax)),
        "U" => int_rows(&build_central_even(NumberKind::Second, nmax)),
        "u" => int_rows(&build_central_even(NumberKind::First, nmax)),
        "V" => int_rows(&build_central_odd(NumberKind::Second, nmax)),
        "v" => int_rows(&build_central_odd(NumberKind::First, nmax)),
        "LS" => eval_rows(nmax, true),
        "ls" => eval_rows(nmax, false),
        _ => return None,
    };
    Some(Table {
        kind: kind.to_string(),
        nmax,
        rows,
    })
}

fn int_rows(t: &jacobi_stirling::triangles::IntTriangle) -> Vec<Vec<Cell>> {
    t.rows()
        .iter()
        .map(|row| row.iter().map(int_cell).collect())
        .collect()
}

fn eval_rows(nmax: u32, second: bool) -> Vec<Vec<Cell>> {
    let t = if second {
        build_js_second(nmax)
    } else {
        build_js_first(nmax)
    };
    (0..=nmax)
        .map(|n| {
            (0..=n)
                .map(|k| int_cell(&legendre_stirling(&t, n, k).expect("in range")))
                .collect()
        })
        .collect()
}

/// The polynomial triangles evaluated at a rational point `z`, given as
/// `p` or `p/q`; cells become exact rational values.
pub fn build_evaluated_table(kind: &str, nmax: u32, z: &str) -> Result<Table, String> {
    let t = match kind {
        "JS" => build_js_second(nmax),
        "js" => build_js_first(nmax),
        other => {
            return Err(format!(
                "--z applies to the polynomial kinds JS and js, not `{other}`"
            ))
        }
    };
    let point = parse_rational(z)?;
    let rows = t
        .rows()
        .iter()
        .map(|row| {
            row.iter()
                .map(|p| Cell::Value(p.eval_rat(&point).to_string()))
                .collect()
        })
        .collect();
    Ok(Table {
        kind: format!("{kind}(z={point})"),
        nmax,
        rows,
    })
}

fn parse_rational(s: &str) -> Result<jacobi_stirling::exactmath::BigRational, String> {
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let num: BigInt = num
        .trim()
        .parse()
        .map_err(|_| format!("cannot parse `{s}` as a rational"))?;
    let den: BigInt = den
        .trim()
        .parse()
        .map_err(|_| format!("cannot parse `{s}` as a rational"))?;
    if den == BigInt::from(0) {
        return Err("zero denominator".to_string());
    }
    Ok(jacobi_stirling::exactmath::BigRational::new(num, den))
}

pub fn table_json(table: &Table) -> String {
    let mut s = serde_json::to_string(table).expect("table serializes");
    s.push('\n');
    s
}

pub fn table_csv(table: &Table) -> String {
    let mut out = String::new();
    out.push_str("n\\k");
    for k in 0..=table.nmax {
        out.push_str(&format!(",{k}"));
    }
    out.push('\n');
    for (n, row) in table.rows.iter().enumerate() {
        out.push_str(&n.to_string());
        for k in 0..=table.nmax as usize {
            out.push(',');
            if let Some(cell) = row.get(k) {
                match cell {
                    Cell::Value(v) => out.push_str(v),
                    Cell::Coeffs(cs) if cs.is_empty() => out.push('0'),
                    Cell::Coeffs(cs) => out.push_str(&cs.join(";")),
                }
            }
        }
        out.push('\n');
    }
    out
}

pub fn table_text(table: &Table) -> String {
    let mut out = format!("{} triangle, n <= {}\n", table.kind, table.nmax);
    for (n, row) in table.rows.iter().enumerate() {
        let cells: Vec<String> = row
            .iter()
            .map(|cell| match cell {
                Cell::Value(v) => v.clone(),
                Cell::Coeffs(cs) if cs.is_empty() => "0".to_string(),
                Cell::Coeffs(cs) => {
                    let ints: Vec<BigInt> =
                        cs.iter().map(|c| c.parse().expect("decimal")).collect();
                    IntPoly::from_coeffs(ints).pretty("z")
                }
            })
            .collect();
        out.push_str(&format!("n={n}: {}\n", cells.join(", ")));
    }
    out
}

/// Canonical serializations of one family, sorted; the graded families
/// accept an optional statistic filter.
pub fn enumerate_family(
    family: &str,
    n: u32,
    k: u32,
    i: Option<u32>,
) -> Result<Vec<String>, String> {
    let bounds = EnumBounds::default();
    let stat_range = |i: Option<u32>| -> Vec<u32> {
        match i {
            Some(v) => vec![v],
            None => (0..=n.saturating_sub(k)).collect(),
        }
    };
    let mut out: Vec<String> = match family {
        "signed" => models::enum_signed_partitions(n, k, &bounds)
            .map_err(|e| e.to_string())?
            .iter()
            .map(|p| p.canonical())
            .collect(),
        "quasipair" => {
            let mut all = Vec::new();
            for s in stat_range(i) {
                all.extend(
                    models::enum_quasiperm_pairs(n, k, s, &bounds)
                        .map_err(|e| e.to_string())?
                        .iter()
                        .map(|(a, b)| format!("[{},{}]", a.canonical(), b.canonical())),
                );
            }
            all
        }
        "triple" => {
            let mut all = Vec::new();
            for s in stat_range(i) {
                all.extend(
                    models::enum_partition_triples(n, k, s, &bounds)
                        .map_err(|e| e.to_string())?
                        .iter()
                        .map(|t| t.canonical()),
                );
            }
            all
        }
        "firstkind" => {
            let mut all = Vec::new();
            for s in stat_range(i) {
                all.extend(
                    models::enum_first_kind_pairs(n, k, s, &bounds)
                        .map_err(|e| e.to_string())?
                        .iter()
                        .map(|p| p.canonical()),
                );
            }
            all
        }
        "riordan" => models::enum_riordan_complexes(n, k, &bounds)
            .map_err(|e| e.to_string())?
            .iter()
            .map(|c| c.canonical())
            .collect(),
        "oddpart" => models::enum_odd_partitions(n, k, &bounds)
            .map_err(|e| e.to_string())?
            .iter()
            .map(|p| jacobi_stirling::models::partitions::serialize_partition(p))
            .collect(),
        other => return Err(format!("unknown family `{other}`")),
    };
    out.sort();
    Ok(out)
}
