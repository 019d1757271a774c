//! Enumeration of finite maps and subsets, with size caps.

use thiserror::Error;

/// Default cap for enumerations of V-functors.
pub const DEFAULT_FUNCTOR_CAP: u64 = 100_000;
/// Default cap for enumerations of choice functions.
pub const DEFAULT_CHOICE_CAP: u64 = 1_000_000;
/// Default cap on the ground set of a powerset construction.
pub const DEFAULT_POWERSET_CAP: usize = 12;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("enumeration of {size} candidates exceeds the cap of {cap}")]
pub struct CarrierTooLarge {
    pub size: u128,
    pub cap: u128,
}

/// `codomain^domain`, saturating.
pub fn count_maps(domain: usize, codomain: usize) -> u128 {
    (0..domain).fold(1u128, |acc, _| acc.saturating_mul(codomain as u128))
}

pub fn check_cap(size: u128, cap: u64) -> Result<(), CarrierTooLarge> {
    if size > cap as u128 {
        Err(CarrierTooLarge {
            size,
            cap: cap as u128,
        })
    } else {
        Ok(())
    }
}

/// Every map `{0..domain} → {0..codomain}` in lexicographic order.
pub fn all_maps(domain: usize, codomain: usize) -> AllMaps {
    AllMaps {
        current: if domain == 0 || codomain > 0 {
            Some(vec![0; domain])
        } else {
            None
        },
        codomain,
    }
}

pub struct AllMaps {
    current: Option<Vec<usize>>,
    codomain: usize,
}

impl Iterator for AllMaps {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.current.clone()?;
        let cur = self.current.as_mut().expect("checked above");
        let mut i = cur.len();
        loop {
            if i == 0 {
                self.current = None;
                break;
            }
            i -= 1;
            cur[i] += 1;
            if cur[i] < self.codomain {
                break;
            }
            cur[i] = 0;
        }
        Some(out)
    }
}

/// Members of the subset encoded by `mask`.
pub fn members(mask: usize, n: usize) -> impl Iterator<Item = usize> {
    (0..n).filter(move |i| mask & (1 << i) != 0)
}
