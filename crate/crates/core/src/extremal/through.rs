//! Does a copy of the pattern use a given host cell?
//!
//! One pattern one (the anchor) is pinned to the host cell, then the other
//! ones are placed one at a time while per-axis index maps stay strictly
//! increasing with enough room left for the pattern lines in between.

use crate::pattern::Pattern;

pub(crate) struct Through {
    pdims: Vec<usize>,
    hdims: Vec<usize>,
    ones: Vec<Vec<usize>>,
}

impl Through {
    pub(crate) fn new(pattern: &Pattern, hdims: &[usize]) -> Self {
        Through { pdims: pattern.dims().to_vec(), hdims: hdims.to_vec(), ones: pattern.ones().to_vec() }
    }

    pub(crate) fn row_major_last(&self) -> usize {
        self.ones.len() - 1
    }

    /// True when the ones of `host` (dense row-major) contain a copy of the
    /// pattern in which pattern one `anchor` sits on host cell `x`.
    pub(crate) fn copy_through(&self, host: &[bool], anchor: usize, x: &[usize]) -> bool {
        let d = self.pdims.len();
        if self.pdims.iter().zip(&self.hdims).any(|(p, h)| p > h) {
            return false;
        }
        let a = &self.ones[anchor];
        for ax in 0..d {
            if x[ax] < a[ax] || self.hdims[ax] - x[ax] < self.pdims[ax] - a[ax] {
                return false;
            }
        }
        let mut map: Vec<Vec<Option<usize>>> = self.pdims.iter().map(|&s| vec![None; s]).collect();
        for ax in 0..d {
            map[ax][a[ax]] = Some(x[ax]);
        }
        // Place the remaining ones nearest the anchor first.
        let mut order: Vec<usize> = (0..self.ones.len()).filter(|&i| i != anchor).collect();
        order.sort_by_key(|&i| {
            let dist: usize = self.ones[i].iter().zip(a).map(|(p, q)| p.abs_diff(*q)).sum();
            (dist, i)
        });
        let mut s = Search { t: self, host, map, order: &order };
        s.place(0)
    }
}

struct Search<'a> {
    t: &'a Through,
    host: &'a [bool],
    map: Vec<Vec<Option<usize>>>,
    order: &'a [usize],
}

impl Search<'_> {
    /// Admissible host range for pattern index `i` on axis `ax`.
    fn range(&self, ax: usize, i: usize) -> (usize, usize) {
        let m = &self.map[ax];
        let mut lo = i;
        let mut hi = self.t.hdims[ax] - (self.t.pdims[ax] - i);
        if let Some((j, v)) = (0..i).rev().find_map(|j| m[j].map(|v| (j, v))) {
            lo = lo.max(v + (i - j));
        }
        if let Some((j, v)) = (i + 1..m.len()).find_map(|j| m[j].map(|v| (j, v))) {
            match v.checked_sub(j - i) {
                Some(h) => hi = hi.min(h),
                None => return (1, 0),
            }
        }
        (lo, hi)
    }

    fn place(&mut self, k: usize) -> bool {
        if k == self.order.len() {
            return true;
        }
        let one = &self.t.ones[self.order[k]];
        self.assign_axis(k, one, 0)
    }

    /// Chooses host indices axis by axis for the current one, then checks the cell.
    fn assign_axis(&mut self, k: usize, one: &[usize], ax: usize) -> bool {
        if ax == one.len() {
            let r = one
                .iter()
                .enumerate()
                .fold(0, |acc, (a, &i)| acc * self.t.hdims[a] + self.map[a][i].expect("assigned"));
            return self.host[r] && self.place(k + 1);
        }
        let i = one[ax];
        if self.map[ax][i].is_some() {
            return self.assign_axis(k, one, ax + 1);
        }
        let (lo, hi) = self.range(ax, i);
        for v in lo..=hi {
            self.map[ax][i] = Some(v);
            if self.assign_axis(k, one, ax + 1) {
                self.map[ax][i] = None;
                return true;
            }
        }
        self.map[ax][i] = None;
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pattern::mat_contains;

    #[test]
    fn agrees_with_full_containment_on_small_hosts() {
        let p = Pattern::from_rows(&[&[0, 1], &[1, 1]]).unwrap();
        let dims = [3usize, 3];
        let t = Through::new(&p, &dims);
        for mask in 0u32..512 {
            let dense: Vec<bool> = (0..9).map(|i| mask >> i & 1 == 1).collect();
            let host = Pattern::new(dims.to_vec(), (0..9).filter(|&i| dense[i]).map(|i| vec![i / 3, i % 3])).unwrap();
            let full = mat_contains(&host, &p).unwrap().is_some();
            let any = (0..9).any(|i| dense[i] && (0..p.weight()).any(|a| t.copy_through(&dense, a, &[i / 3, i % 3])));
            assert_eq!(full, any, "mask {mask:b}");
        }
    }
}
