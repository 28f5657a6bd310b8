//! Power-sum coefficients `θ^λ_ρ` of Jack functions, built weight by weight
//! from the two Pieri-type relations alone.
//!
//! Every partition `ν ⊢ n` is reached from a unique parent `λ ⊢ n−1`: drop a
//! trailing part 1, or lower the last part by one. For a parent of length `d`
//! the two relations form a 2×2 system in `θ^{λ^{(d)}}` and `θ^{(λ,1)}`. All
//! other `θ^{λ^{(i)}}`, `i < d`, belong to parents that are shorter or have a
//! smaller last part, so processing parents by (length, last part) keeps every
//! right-hand side known. Single rows come out of the parent `(n−1)`, which
//! has no `i < d` terms at all.

use std::collections::HashMap;

use serde::Serialize;

use crate::exact::rational::Rational;
use crate::exact::scalar::Scalar;
use crate::partitions::{enumerate, Partition, Surgery};

use super::mode::Mode;
use super::pieri::{pieri, PieriRow};
use super::JackError;

/// All `θ^λ_ρ` with `|λ| = |ρ| = n`.
#[derive(Clone, Debug, PartialEq)]
pub struct ThetaTable<S> {
    n: u32,
    parts: Vec<Partition>,
    index: HashMap<Partition, usize>,
    rows: Vec<Vec<S>>,
}

#[derive(Serialize)]
pub struct ThetaRow {
    pub lambda: Partition,
    pub rho: Partition,
    pub value: String,
}

impl<S: Scalar> ThetaTable<S> {
    fn blank(n: u32) -> (Vec<Partition>, HashMap<Partition, usize>) {
        let parts = enumerate(n, 1);
        let index = parts.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        (parts, index)
    }

    /// Assembles a table from rows indexed like [`enumerate`]`(n, 1)`.
    pub fn from_rows(n: u32, rows: Vec<Vec<S>>) -> Self {
        let (parts, index) = Self::blank(n);
        assert_eq!(rows.len(), parts.len());
        ThetaTable { n, parts, index, rows }
    }

    pub fn weight(&self) -> u32 {
        self.n
    }

    pub fn partitions(&self) -> &[Partition] {
        &self.parts
    }

    pub fn index_of(&self, p: &Partition) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn get(&self, lambda: &Partition, rho: &Partition) -> Option<&S> {
        Some(&self.rows[self.index_of(lambda)?][self.index_of(rho)?])
    }

    pub fn row(&self, lambda: &Partition) -> Option<&[S]> {
        Some(&self.rows[self.index_of(lambda)?])
    }

    pub fn serialize_rows(&self, text: impl Fn(&S) -> String) -> Vec<ThetaRow> {
        let mut out = Vec::new();
        for (i, l) in self.parts.iter().enumerate() {
            for (j, r) in self.parts.iter().enumerate() {
                out.push(ThetaRow { lambda: l.clone(), rho: r.clone(), value: text(&self.rows[i][j]) });
            }
        }
        out
    }
}

/// Tables for every weight `0..=n` in one mode.
#[derive(Clone, Debug)]
pub struct ThetaTower<S> {
    mode: Mode<S>,
    tables: Vec<ThetaTable<S>>,
}

impl<S: Scalar> ThetaTower<S> {
    pub fn new(mode: Mode<S>) -> Self {
        let t0 = ThetaTable::from_rows(0, vec![vec![S::one()]]);
        let t1 = ThetaTable::from_rows(1, vec![vec![S::one()]]);
        ThetaTower { mode, tables: vec![t0, t1] }
    }

    pub fn build(n: u32, mode: Mode<S>) -> Result<Self, JackError> {
        let mut t = Self::new(mode);
        t.extend_to(n)?;
        Ok(t)
    }

    pub fn mode(&self) -> &Mode<S> {
        &self.mode
    }

    pub fn max_weight(&self) -> u32 {
        self.tables.len() as u32 - 1
    }

    pub fn extend_to(&mut self, n: u32) -> Result<(), JackError> {
        while self.max_weight() < n {
            let next = next_table(self.tables.last().unwrap(), &self.mode)?;
            self.tables.push(next);
        }
        Ok(())
    }

    pub fn table(&self, n: u32) -> Option<&ThetaTable<S>> {
        self.tables.get(n as usize)
    }

    pub fn into_table(mut self, n: u32) -> Option<ThetaTable<S>> {
        if (n as usize) < self.tables.len() {
            Some(self.tables.swap_remove(n as usize))
        } else {
            None
        }
    }

    /// `ϑ^λ_μ = z_μ θ^λ_{μ ∪ 1^{|λ|−|μ|}}`; the tower is extended as needed.
    pub fn vartheta(&mut self, lambda: &Partition, mu: &Partition) -> Result<S, JackError> {
        let n = lambda.weight();
        let r = mu.weight();
        if r > n {
            return Err(JackError::WeightTooLarge { mu: mu.clone(), lambda: lambda.clone() });
        }
        self.extend_to(n)?;
        let rho = mu.pad_ones(n - r);
        let z = S::from_rational(&Rational::from_integer(mu.stats().z));
        let t = self.tables[n as usize].get(lambda, &rho).expect("complete table");
        Ok(z.times(t))
    }
}

/// Computes the weight-`n` table from the weight-`(n−1)` table.
fn next_table<S: Scalar>(prev: &ThetaTable<S>, mode: &Mode<S>) -> Result<ThetaTable<S>, JackError> {
    let n = prev.n + 1;
    let (parts, index) = ThetaTable::<S>::blank(n);
    let mut rows: Vec<Option<Vec<S>>> = vec![None; parts.len()];

    let mut parents: Vec<&Partition> = prev.parts.iter().collect();
    parents.sort_by_key(|p| (p.len(), p.parts().last().copied().unwrap_or(0)));

    // Per ρ ⊢ n: θ^λ_{ρ∖1} index and the (coefficient, index) list for the second relation.
    let first_rel: Vec<Option<usize>> = parts
        .iter()
        .map(|rho| rho.surgery(Surgery::Remove(1)).ok().map(|s| prev.index[&s]))
        .collect();
    let second_rel: Vec<Vec<(i64, usize)>> = parts
        .iter()
        .map(|rho| {
            let mut v = Vec::new();
            for (&part, _) in rho.multiplicities().iter() {
                if part < 2 {
                    continue;
                }
                let r = part - 1;
                let coef = r as i64 * (rho.multiplicity(r) as i64 + 1);
                let s = rho.surgery(Surgery::Down(part)).expect("part present");
                v.push((coef, prev.index[&s]));
            }
            v
        })
        .collect();

    for lambda in parents {
        let d = lambda.len();
        let pr: PieriRow<S> = pieri(lambda, mode)?;
        let lrow = &prev.rows[prev.index[lambda]];
        let lower: Vec<(usize, usize)> = (1..d)
            .filter_map(|i| lambda.add_node(i).ok().map(|nu| (i, nu)))
            .map(|(i, nu)| (i, index[&nu]))
            .collect();
        for &(_, k) in &lower {
            if rows[k].is_none() {
                return Err(JackError::Invariant(format!(
                    "row {} needed before it was computed",
                    parts[k]
                )));
            }
        }
        let x_target = lambda.add_node(d).ok().map(|nu| index[&nu]);
        let y_target = index[&lambda.add_node(d + 1).expect("appending a part 1 is always valid")];
        let cd = pr.c(d).clone();
        let cd1 = pr.c(d + 1).clone();
        let xd = pr.x(d).clone();
        let xd1 = pr.x(d + 1).clone();
        let disc = cd.times(&cd1).times(&xd1.minus(&xd));
        if x_target.is_some() && disc.is_zero() {
            return Err(JackError::Singular { lambda: lambda.clone() });
        }
        let mut xs = Vec::with_capacity(parts.len());
        let mut ys = Vec::with_capacity(parts.len());
        for k in 0..parts.len() {
            let mut r1 = first_rel[k].map_or_else(S::zero, |j| lrow[j].clone());
            let mut r2 = S::zero();
            for &(coef, j) in &second_rel[k] {
                if !lrow[j].is_zero() {
                    r2 = r2.plus(&lrow[j].scaled(coef));
                }
            }
            for &(i, idx) in &lower {
                let t = rows[idx].as_ref().unwrap()[k].times(pr.c(i));
                r1 = r1.minus(&t);
                r2 = r2.minus(&t.times(pr.x(i)));
            }
            if x_target.is_some() {
                // c_d X + c_{d+1} Y = r1,  c_d x_d X + c_{d+1} x_{d+1} Y = r2
                let y = xd.times(&r1).minus(&r2).negated().over(&cd1.times(&xd1.minus(&xd))).unwrap();
                let x = r1.minus(&cd1.times(&y)).over(&cd).unwrap();
                xs.push(x);
                ys.push(y);
            } else {
                let y = r1.over(&cd1).ok_or(JackError::Singular { lambda: lambda.clone() })?;
                if cd1.times(&xd1).times(&y) != r2 {
                    return Err(JackError::Invariant(format!(
                        "second relation fails for parent {lambda} at {}",
                        parts[k]
                    )));
                }
                ys.push(y);
            }
        }
        if let Some(xi) = x_target {
            rows[xi] = Some(xs);
        }
        rows[y_target] = Some(ys);
    }
    let rows = rows
        .into_iter()
        .enumerate()
        .map(|(k, r)| r.ok_or_else(|| JackError::Invariant(format!("row {} never produced", parts[k]))))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(ThetaTable { n, parts, index, rows })
}

/// The weight-`n` table.
pub fn theta_all<S: Scalar>(n: u32, mode: &Mode<S>) -> Result<ThetaTable<S>, JackError> {
    Ok(ThetaTower::build(n, mode.clone())?.into_table(n).unwrap())
}

/// One-off `ϑ^λ_μ`; prefer a [`ThetaTower`] for repeated queries.
pub fn vartheta<S: Scalar>(lambda: &Partition, mu: &Partition, mode: &Mode<S>) -> Result<S, JackError> {
    ThetaTower::new(mode.clone()).vartheta(lambda, mu)
}
