//! Linear forests: vertex-disjoint unions of paths, written `ℓ1+ℓ2+…`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A multiset of path orders, stored in non-increasing order. Every order
/// is at least 2 and there is at least one path.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinearForest {
    orders: Vec<usize>,
}

impl LinearForest {
    pub fn new(orders: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut orders: Vec<usize> = orders.into_iter().collect();
        if orders.is_empty() {
            return Err(Error::InvalidForest("a linear forest needs at least one path".into()));
        }
        if let Some(&bad) = orders.iter().find(|&&l| l < 2) {
            return Err(Error::InvalidForest(format!(
                "path order {bad} is below 2"
            )));
        }
        orders.sort_unstable_by(|a, b| b.cmp(a));
        Ok(LinearForest { orders })
    }

    /// `copies` disjoint copies of P_order.
    pub fn uniform(copies: usize, order: usize) -> Result<Self> {
        LinearForest::new(std::iter::repeat_n(order, copies))
    }

    pub fn parse(text: &str) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() {
            return Err(Error::InvalidForest("empty forest text".into()));
        }
        let orders = text
            .split('+')
            .map(|part| {
                part.trim().parse::<usize>().map_err(|_| {
                    Error::InvalidForest(format!("'{part}' is not a path order in '{text}'"))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        LinearForest::new(orders)
    }

    pub fn orders(&self) -> &[usize] {
        &self.orders
    }

    /// Number of paths k.
    pub fn path_count(&self) -> usize {
        self.orders.len()
    }

    pub fn longest(&self) -> usize {
        self.orders[0]
    }

    /// δ_F = Σ⌊ℓᵢ/2⌋ − 1.
    pub fn delta(&self) -> usize {
        self.orders.iter().map(|l| l / 2).sum::<usize>() - 1
    }

    /// |F| = Σℓᵢ.
    pub fn total_order(&self) -> usize {
        self.orders.iter().sum()
    }

    pub fn odd_count(&self) -> usize {
        self.orders.iter().filter(|&&l| l % 2 == 1).count()
    }

    pub fn has_even_component(&self) -> bool {
        self.orders.iter().any(|l| l % 2 == 0)
    }

    pub fn all_odd(&self) -> bool {
        !self.has_even_component()
    }

    /// Why the forest falls outside the k ≥ 2, ℓᵢ ≠ 3 family, if it does.
    pub fn hypothesis_violation(&self) -> Option<String> {
        if self.orders.len() < 2 {
            Some(format!("{self} has fewer than two paths"))
        } else if self.orders.contains(&3) {
            Some(format!("{self} contains a path of order 3"))
        } else {
            None
        }
    }

    pub fn satisfies_hypotheses(&self) -> bool {
        self.hypothesis_violation().is_none()
    }

    /// `Some(ℓ)` when the forest is 2P_ℓ with ℓ odd.
    pub fn twin_odd_order(&self) -> Option<usize> {
        match self.orders[..] {
            [a, b] if a == b && a % 2 == 1 => Some(a),
            _ => None,
        }
    }

    pub fn is_three_p5(&self) -> bool {
        self.orders == [5, 5, 5]
    }

    /// The same forest with one path of order `order` removed.
    pub fn without_path(&self, order: usize) -> Option<Result<Self>> {
        let i = self.orders.iter().position(|&l| l == order)?;
        let mut rest = self.orders.clone();
        rest.remove(i);
        Some(LinearForest::new(rest))
    }

    /// Every forest with total order at most `max_total` and at least
    /// `min_paths` paths, in increasing (total, orders) order.
    pub fn all_up_to(max_total: usize, min_paths: usize) -> Vec<LinearForest> {
        fn parts(remaining: usize, cap: usize, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if remaining == 0 {
                out.push(acc.clone());
                return;
            }
            for l in (2..=cap.min(remaining)).rev() {
                acc.push(l);
                parts(remaining - l, l, acc, out);
                acc.pop();
            }
        }
        let mut out = Vec::new();
        for total in 2..=max_total {
            let mut found = Vec::new();
            parts(total, total, &mut Vec::new(), &mut found);
            found.sort();
            out.extend(
                found
                    .into_iter()
                    .filter(|p| p.len() >= min_paths)
                    .map(|orders| LinearForest { orders }),
            );
        }
        out
    }
}

impl fmt::Display for LinearForest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.orders.iter().enumerate() {
            if i > 0 {
                f.write_str("+")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl FromStr for LinearForest {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        LinearForest::parse(s)
    }
}

impl serde::Serialize for LinearForest {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}
