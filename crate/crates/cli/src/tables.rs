//! The three reference tables, regenerated and diffed against the golden
//! copies compiled into the binary.

use std::collections::BTreeMap;

use newton_ehrhart::formulas::{family_partition, Family};
use newton_ehrhart::{hstar, HStarVector, Partition, PolytopeHandle};
use serde_json::{json, Value};

use crate::Failure;

const GOLDEN: [&str; 3] =
    [include_str!("../golden/table1.txt"), include_str!("../golden/table2.txt"), include_str!("../golden/table3.txt")];

pub struct Row {
    pub label: String,
    pub handle: PolytopeHandle,
    /// `h` the table lists as `h >= h_min`; `None` when it lists one value.
    pub stable_from: Option<u32>,
    pub family: Option<(Family, usize)>,
}

pub struct Computed {
    pub row: Row,
    pub hstar: HStarVector,
    pub golden: Option<String>,
    pub formula: Option<HStarVector>,
    pub stable: Option<bool>,
}

impl Computed {
    pub fn matches(&self) -> bool {
        self.golden.as_deref() == Some(self.hstar.to_string().as_str())
            && self.formula.as_ref().is_none_or(|f| *f == self.hstar)
            && self.stable != Some(false)
    }
}

fn golden(which: usize) -> BTreeMap<String, String> {
    GOLDEN[which - 1]
        .lines()
        .filter_map(|l| l.split_once(": "))
        .map(|(k, v)| (k.trim().to_string(), v.trim().to_string()))
        .collect()
}

pub fn default_max_row(which: usize) -> usize {
    match which {
        1 => 8,
        _ => 9,
    }
}

fn groth(h: u32, parts: Vec<u32>) -> Result<PolytopeHandle, Failure> {
    Ok(PolytopeHandle::grothendieck(h, Partition::new(parts)?)?)
}

/// Rows of table `which` up to `max_row` (`m` for tables 1 and 2, `n` for
/// table 3).
pub fn rows(which: usize, max_row: usize) -> Result<Vec<Row>, Failure> {
    let mut out = Vec::new();
    match which {
        1 => {
            for m in 3..=max_row {
                let mut parts = vec![m as u32 + 1; m];
                parts[m - 1] = 0;
                out.push(Row { label: format!("m={m} h>=2"), handle: groth(2, parts)?, stable_from: Some(2), family: None });
            }
        }
        2 => {
            for m in 3..=max_row {
                let mut parts = vec![0u32; m];
                parts[..(m - 1) / 2].iter_mut().for_each(|x| *x = 2);
                if m % 2 == 0 {
                    parts[m / 2 - 1] = 1;
                }
                if m == 3 {
                    out.push(Row { label: "m=3 h=1".into(), handle: groth(1, parts.clone())?, stable_from: None, family: None });
                    out.push(Row { label: "m=3 h>=2".into(), handle: groth(2, parts)?, stable_from: Some(2), family: None });
                } else {
                    out.push(Row { label: format!("m={m} h>=1"), handle: groth(1, parts)?, stable_from: Some(1), family: None });
                }
            }
        }
        3 => {
            for n in 3..=max_row.min(9) {
                let mut fams = vec![Family::NearHook, Family::TwoRow, Family::SingleRow];
                fams.retain(|f| match f {
                    Family::NearHook => n <= 8,
                    Family::TwoRow => true,
                    Family::SingleRow => n <= 6,
                });
                let mut seen: Vec<Partition> = Vec::new();
                for f in fams {
                    let lambda = family_partition(f, n)?;
                    if seen.contains(&lambda) {
                        continue;
                    }
                    seen.push(lambda.clone());
                    let digits: String = lambda.parts().iter().filter(|&&x| x > 0).map(|x| x.to_string()).collect();
                    out.push(Row {
                        label: format!("({digits})"),
                        handle: PolytopeHandle::schur(lambda),
                        stable_from: None,
                        family: Some((f, n)),
                    });
                }
            }
        }
        _ => return Err(Failure::Usage(format!("there is no table {which} (choose 1, 2 or 3)"))),
    }
    Ok(out)
}

/// Equal lattice-point sets at `h` and `h + 1`.
fn stable(handle: &PolytopeHandle) -> Result<bool, Failure> {
    let h = handle.h().expect("grothendieck row");
    let next = PolytopeHandle::grothendieck(h + 1, handle.lambda().clone())?;
    Ok(handle.lattice_points()? == next.lattice_points()?)
}

pub fn compute(which: usize, max_row: usize, stability_check: bool) -> Result<Vec<Computed>, Failure> {
    let gold = golden(which);
    rows(which, max_row)?
        .into_iter()
        .map(|row| {
            let v = hstar(&row.handle)?;
            let formula = row.family.map(|(f, n)| f.hstar(n)).transpose()?;
            let stable = match (stability_check, row.stable_from) {
                (true, Some(_)) => Some(stable(&row.handle)?),
                _ => None,
            };
            Ok(Computed { golden: gold.get(&row.label).cloned(), row, hstar: v, formula, stable })
        })
        .collect()
}

pub fn json_row(c: &Computed) -> Value {
    json!({
        "label": c.row.label,
        "handle": c.row.handle,
        "hstar": c.hstar,
        "golden": c.golden,
        "formula_agrees": c.formula.as_ref().map(|f| *f == c.hstar),
        "stable": c.stable,
        "matches": c.matches(),
    })
}

/// Numeric CSV fields: `m,h,h*...` for tables 1 and 2, `digits,n,h*...`
/// for table 3.
pub fn csv_row(which: usize, c: &Computed) -> String {
    let lead = if which == 3 {
        let digits = c.row.label.trim_matches(|ch| ch == '(' || ch == ')');
        format!("{digits},{}", c.row.handle.lambda().weight())
    } else {
        format!("{},{}", c.row.handle.m(), c.row.handle.h().unwrap_or(0))
    };
    format!("{lead},{}", c.hstar)
}
