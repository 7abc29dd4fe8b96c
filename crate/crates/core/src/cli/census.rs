use crate::error::Result;
use crate::knots::{gcd, KnotExpr};

pub const MAX_DEPTH: usize = 3;

/// Every accepted expression with parameters in `1..=max_param`, genus at
/// most `max_genus` and nesting depth at most [`MAX_DEPTH`], ordered by genus
/// then by rendered expression.
pub fn enumerate(max_genus: i64, max_param: i64) -> Result<Vec<KnotExpr>> {
    let mut found: Vec<(i64, String, KnotExpr)> = vec![(0, "U".into(), KnotExpr::Unknot)];

    let mut layer = Vec::new();
    for p in 2..=max_param {
        for q in p + 1..=max_param {
            if gcd(p, q) == 1 && (p - 1) * (q - 1) / 2 <= max_genus {
                layer.push(KnotExpr::torus(p, q));
            }
        }
    }

    for depth in 1..=MAX_DEPTH {
        let mut next = Vec::new();
        for expr in layer {
            let genus = expr.genus()?;
            if genus > max_genus {
                continue;
            }
            if depth < MAX_DEPTH {
                for p in 2..=max_param {
                    // cabling multiplies genus by at least p
                    if p * genus > max_genus {
                        break;
                    }
                    for q in 1..=max_param {
                        if gcd(p, q) == 1 {
                            next.push(KnotExpr::cable(p, q, expr.clone()));
                        }
                    }
                }
            }
            found.push((genus, expr.to_string(), expr));
        }
        layer = next;
    }

    found.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));
    Ok(found.into_iter().map(|(_, _, e)| e).collect())
}
