//! Abstract linking-table and pigeonhole machinery: the counting arguments
//! behind the multi-component link results, stripped of their topology. Only
//! the mod-2 / sign structure of the linking data is modelled.

use serde::{Deserialize, Serialize};

use crate::Error;

/// Candidate cycles (bins) versus link components (targets), with a boolean
/// incidence table saying which target links which bin.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PigeonholeInstance {
    pub bins: Vec<usize>,
    pub targets: Vec<usize>,
    /// `incidence[t][b]` — target `t` links bin `b`, indexed by position.
    pub incidence: Vec<Vec<bool>>,
}

impl PigeonholeInstance {
    pub fn new(bins: usize, targets: usize, incidence: Vec<Vec<bool>>) -> Result<Self, Error> {
        let inst = PigeonholeInstance {
            bins: (0..bins).collect(),
            targets: (0..targets).collect(),
            incidence,
        };
        inst.check()?;
        Ok(inst)
    }

    fn check(&self) -> Result<(), Error> {
        if self.incidence.len() != self.targets.len()
            || self.incidence.iter().any(|r| r.len() != self.bins.len())
        {
            return Err(Error::Domain("incidence table shape mismatch".into()));
        }
        for (t, row) in self.incidence.iter().enumerate() {
            if row.iter().filter(|&&b| b).count() < 2 {
                return Err(Error::Domain(format!(
                    "target {} links fewer than two bins",
                    t + 1
                )));
            }
        }
        Ok(())
    }

    fn bin_count(&self, b: usize) -> usize {
        self.incidence.iter().filter(|row| row[b]).count()
    }
}

/// Pick a bin incident to at least `need - 1` targets, with those targets.
///
/// Requires every target to link at least two bins and the counting
/// inequality `2 * targets > (need - 2) * bins`, which forces such a bin to
/// exist. Lowest-id bin and targets win ties.
pub fn pigeonhole_select(
    inst: &PigeonholeInstance,
    need: usize,
) -> Result<(usize, Vec<usize>), Error> {
    inst.check()?;
    if need < 2 {
        return Err(Error::Domain(format!("need must be >= 2, got {need}")));
    }
    if 2 * inst.targets.len() <= (need - 2) * inst.bins.len() {
        return Err(Error::Domain(format!(
            "counting precondition fails: 2*{} <= {}*{}",
            inst.targets.len(),
            need - 2,
            inst.bins.len()
        )));
    }
    let bin = (0..inst.bins.len())
        .find(|&b| inst.bin_count(b) >= need - 1)
        .ok_or_else(|| {
            Error::Domain("no bin meets the pigeonhole bound despite preconditions".into())
        })?;
    let targets: Vec<usize> = (0..inst.targets.len())
        .filter(|&t| inst.incidence[t][bin])
        .take(need - 1)
        .map(|t| inst.targets[t])
        .collect();
    Ok((inst.bins[bin], targets))
}

/// Turn an integer linking-value table into a pigeonhole instance.
///
/// `values[t][b]` is the (signed) linking value of target `t` with bin `b`;
/// signs alternate `+,-,+,-,...` over the bins and each target's signed sum
/// must vanish, with a nonzero value at its designated partner bin. A zero
/// sum with exactly one nonzero term is impossible, so every target is
/// incident to at least two bins.
pub fn homology_incidence(
    values: &[Vec<i64>],
    partners: &[usize],
) -> Result<PigeonholeInstance, Error> {
    if values.is_empty() {
        return Err(Error::Domain("empty linking table".into()));
    }
    let bins = values[0].len();
    if values.iter().any(|r| r.len() != bins) {
        return Err(Error::Domain("ragged linking table".into()));
    }
    if partners.len() != values.len() {
        return Err(Error::Domain("one partner bin per target required".into()));
    }
    for (t, row) in values.iter().enumerate() {
        let signed: i64 = row
            .iter()
            .enumerate()
            .map(|(b, &v)| if b % 2 == 0 { v } else { -v })
            .sum();
        if signed != 0 {
            return Err(Error::Domain(format!(
                "target {} violates the alternating-sum relation: sum = {signed}",
                t + 1
            )));
        }
        let p = partners[t];
        if p >= bins || row[p] == 0 {
            return Err(Error::Domain(format!(
                "target {} has zero linking value with its partner bin",
                t + 1
            )));
        }
    }
    let incidence = values
        .iter()
        .map(|row| row.iter().map(|&v| v != 0).collect())
        .collect();
    PigeonholeInstance::new(bins, values.len(), incidence)
}

/// One row of the consistency-gap table: `m` is the largest complete graph
/// size known to admit a consistent realization, `m'` the smallest size
/// forcing an `n`-link in every tournament.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GapRow {
    pub n: usize,
    pub m_lower: usize,
    pub m_exact: bool,
    pub mprime_lower: usize,
    pub mprime_upper: usize,
    pub cg_lower: Option<usize>,
    pub cg_upper: usize,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GapTable {
    pub rows: Vec<GapRow>,
}

/// Consistency-gap bounds for 2 <= n <= max_n: exact at n = 2, explicit
/// constructions through n = 5, the general `8(2n-3)^2` bound beyond.
pub fn gap_table(max_n: usize) -> Result<GapTable, Error> {
    if max_n < 2 {
        return Err(Error::Domain(format!("gap table needs max_n >= 2, got {max_n}")));
    }
    let mut rows = Vec::new();
    for n in 2..=max_n {
        let row = match n {
            2 => GapRow {
                n,
                m_lower: 6,
                m_exact: true,
                mprime_lower: 8,
                mprime_upper: 8,
                cg_lower: Some(2),
                cg_upper: 2,
            },
            3 => GapRow {
                n,
                m_lower: 10,
                m_exact: true,
                mprime_lower: 10,
                mprime_upper: 23,
                cg_lower: None,
                cg_upper: 13,
            },
            4 => GapRow {
                n,
                m_lower: 12,
                m_exact: false,
                mprime_lower: 12,
                mprime_upper: 66,
                cg_lower: None,
                cg_upper: 54,
            },
            5 => GapRow {
                n,
                m_lower: 15,
                m_exact: false,
                mprime_lower: 15,
                mprime_upper: 154,
                cg_lower: None,
                cg_upper: 139,
            },
            _ => {
                let up = 8 * (2 * n - 3) * (2 * n - 3);
                GapRow {
                    n,
                    m_lower: 3 * n,
                    m_exact: false,
                    mprime_lower: 3 * n,
                    mprime_upper: up,
                    cg_lower: None,
                    cg_upper: up - 3 * n,
                }
            }
        };
        rows.push(row);
    }
    let table = GapTable { rows };
    for row in &table.rows {
        debug_assert!(row.mprime_lower <= row.mprime_upper);
        debug_assert!(row.cg_lower.is_none_or(|lo| lo <= row.cg_upper));
    }
    Ok(table)
}

impl GapTable {
    pub fn to_markdown(&self) -> String {
        let mut out = String::from("| n | m | m' | cg(n) |\n|---|---|----|-------|\n");
        for r in &self.rows {
            let m = if r.m_exact {
                format!("{}", r.m_lower)
            } else {
                format!(">= {}", r.m_lower)
            };
            let mp = if r.mprime_lower == r.mprime_upper {
                format!("{}", r.mprime_upper)
            } else {
                format!("<= {}", r.mprime_upper)
            };
            let cg = match r.cg_lower {
                Some(lo) if lo == r.cg_upper => format!("{lo}"),
                _ => format!("<= {}", r.cg_upper),
            };
            out.push_str(&format!("| {} | {m} | {mp} | {cg} |\n", r.n));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn inst(bins: usize, rows: &[&[usize]]) -> PigeonholeInstance {
        let incidence = rows
            .iter()
            .map(|hits| (0..bins).map(|b| hits.contains(&b)).collect())
            .collect();
        PigeonholeInstance::new(bins, rows.len(), incidence).unwrap()
    }

    #[test]
    fn prop42_shape() {
        // 4 bins, 3 targets each hitting exactly 2 bins, need 3
        let i = inst(4, &[&[0, 1], &[1, 2], &[2, 3]]);
        let (bin, targets) = pigeonhole_select(&i, 3).unwrap();
        assert_eq!(bin, 1); // lowest qualifying bin
        assert_eq!(targets, vec![0, 1]);
    }

    #[test]
    fn prop52_shape() {
        let i = inst(
            5,
            &[&[0, 1], &[0, 2], &[0, 3], &[1, 2], &[3, 4], &[2, 4]],
        );
        let (bin, targets) = pigeonhole_select(&i, 4).unwrap();
        assert_eq!(bin, 0);
        assert_eq!(targets.len(), 3);
    }

    #[test]
    fn rejects_single_bin_target() {
        let incidence = vec![vec![true, false, false, false]];
        assert!(PigeonholeInstance::new(4, 1, incidence).is_err());
    }

    #[test]
    fn rejects_failed_counting_bound() {
        // 2*3 <= 3*4 for need 5 on 4 bins
        let i = inst(4, &[&[0, 1], &[1, 2], &[2, 3]]);
        assert!(pigeonhole_select(&i, 5).is_err());
    }

    #[test]
    fn homology_minimal_example() {
        // values (1, 1, 0, 0) with signs (+,-,+,-): sum 0, partner bin 0
        let i = homology_incidence(&[vec![1, 1, 0, 0]], &[0]).unwrap();
        assert_eq!(i.incidence, vec![vec![true, true, false, false]]);
    }

    #[test]
    fn homology_rejects_bad_sum() {
        // 2 - 1 + 1 - 0 = 2 != 0
        assert!(homology_incidence(&[vec![2, 1, 1, 0]], &[0]).is_err());
    }

    #[test]
    fn homology_rejects_zero_partner() {
        assert!(homology_incidence(&[vec![1, 1, 0, 0]], &[2]).is_err());
    }

    #[test]
    fn homology_single_nonzero_is_impossible() {
        // a zero alternating sum with exactly one nonzero term cannot exist;
        // any attempt to state one fails the relation check
        for b in 0..4 {
            let mut row = vec![0i64; 4];
            row[b] = 3;
            assert!(homology_incidence(&[row], &[b]).is_err());
        }
    }

    #[test]
    fn gap_table_paper_values() {
        let t = gap_table(6).unwrap();
        assert_eq!(t.rows[0].cg_lower, Some(2));
        assert_eq!(t.rows[0].cg_upper, 2);
        assert_eq!(t.rows[1].cg_upper, 13);
        assert_eq!(t.rows[2].cg_upper, 54);
        assert_eq!(t.rows[3].cg_upper, 139);
        assert_eq!(t.rows[4].cg_upper, 8 * 81 - 18);
        assert!(gap_table(1).is_err());
    }

    #[test]
    fn gap_table_markdown_is_stable() {
        let md = gap_table(3).unwrap().to_markdown();
        assert!(md.contains("| 2 | 6 | 8 | 2 |"));
        assert!(md.contains("| 3 | 10 | <= 23 | <= 13 |"));
    }
}
