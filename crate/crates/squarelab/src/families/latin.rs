//! One-factorizations of complete graphs and the symmetric Latin squares
//! they induce.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// Symmetric Latin-square table with zero diagonal: cell (i, j) holds the
/// matching index of the edge ij in a one-factorization of K_order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatinSquare {
    order: usize,
    cells: Vec<u32>,
}

impl LatinSquare {
    pub fn order(&self) -> usize {
        self.order
    }

    /// Cell value, 1-based indices.
    pub fn get(&self, i: usize, j: usize) -> u32 {
        assert!(1 <= i && i <= self.order && 1 <= j && j <= self.order);
        self.cells[(i - 1) * self.order + (j - 1)]
    }

    /// Checks the defining invariants: symmetry, zero diagonal, and every
    /// off-diagonal value's cell set forming a perfect matching.
    pub fn validate(&self) -> Result<()> {
        let n = self.order;
        for i in 1..=n {
            if self.get(i, i) != 0 {
                return Err(Error::Format {
                    what: "latin square",
                    detail: format!("diagonal cell ({i},{i}) is not 0"),
                });
            }
            for j in 1..=n {
                if self.get(i, j) != self.get(j, i) {
                    return Err(Error::Format {
                        what: "latin square",
                        detail: format!("cells ({i},{j}) and ({j},{i}) differ"),
                    });
                }
            }
        }
        for color in 1..=(n as u32 - 1) {
            let mut seen = vec![false; n + 1];
            let mut count = 0;
            for i in 1..=n {
                for j in i + 1..=n {
                    if self.get(i, j) == color {
                        if seen[i] || seen[j] {
                            return Err(Error::Format {
                                what: "latin square",
                                detail: format!("color {color} is not a matching"),
                            });
                        }
                        seen[i] = true;
                        seen[j] = true;
                        count += 1;
                    }
                }
            }
            if count != n / 2 {
                return Err(Error::Format {
                    what: "latin square",
                    detail: format!("color {color} covers {count} edges, expected {}", n / 2),
                });
            }
        }
        Ok(())
    }
}

/// Round-robin (circle method) one-factorization of K_order into order-1
/// perfect matchings on players {1..order}.
pub fn one_factorization(order: usize) -> Result<Vec<Vec<(u32, u32)>>> {
    if order < 2 || order % 2 != 0 {
        return Err(Error::Parameter(format!(
            "one_factorization needs an even order >= 2, got {order}"
        )));
    }
    let n = order;
    let ring = n - 1;
    let mut rounds = Vec::with_capacity(ring);
    for r in 0..ring {
        let mut matching = vec![(n as u32, (r % ring) as u32 + 1)];
        for i in 1..n / 2 {
            let a = (r + i) % ring + 1;
            let b = (r + ring - i) % ring + 1;
            matching.push((a.min(b) as u32, a.max(b) as u32));
        }
        matching.sort_unstable();
        rounds.push(matching);
    }
    Ok(rounds)
}

/// L(i, j) = index (1-based) of the matching containing edge ij; L(i,i) = 0.
pub fn latin_from_factorization(order: usize, rounds: &[Vec<(u32, u32)>]) -> Result<LatinSquare> {
    let mut cells = vec![0u32; order * order];
    for (r, matching) in rounds.iter().enumerate() {
        for &(a, b) in matching {
            let (a, b) = (a as usize, b as usize);
            if a == b || a > order || b > order {
                return Err(Error::Format {
                    what: "one-factorization",
                    detail: format!("bad edge ({a},{b})"),
                });
            }
            cells[(a - 1) * order + (b - 1)] = r as u32 + 1;
            cells[(b - 1) * order + (a - 1)] = r as u32 + 1;
        }
    }
    let square = LatinSquare { order, cells };
    square.validate()?;
    Ok(square)
}
