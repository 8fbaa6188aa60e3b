//! Conjugacy classes by breadth-first conjugation orbits.

use serde::Serialize;

use super::group::Group;

#[derive(Clone, Debug, Serialize)]
pub struct ConjClass {
    /// Minimal-length representative with the smallest canonical word.
    pub representative: usize,
    pub size: usize,
    pub element_order: usize,
    /// Minimal length in the class.
    pub d_c: usize,
    /// Elements of minimal length.
    pub c_min: Vec<usize>,
    pub cuspidal: bool,
    pub elements: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct ConjugacyAnalysis {
    pub classes: Vec<ConjClass>,
    pub class_of: Vec<u32>,
    pub involutions: Vec<usize>,
}

impl ConjugacyAnalysis {
    pub fn new(g: &Group) -> Self {
        let n = g.order();
        let mut class_of = vec![u32::MAX; n];
        let mut classes = Vec::new();
        let full = g.full_mask();
        for start in 0..n {
            if class_of[start] != u32::MAX {
                continue;
            }
            let id = classes.len() as u32;
            class_of[start] = id;
            let mut members = vec![start];
            let mut k = 0;
            while k < members.len() {
                let w = members[k];
                for s in 0..g.rank() {
                    let c = g.lmul(s, g.rmul(w, s));
                    if class_of[c] == u32::MAX {
                        class_of[c] = id;
                        members.push(c);
                    }
                }
                k += 1;
            }
            members.sort_unstable();
            let d_c = g.length(members[0]);
            let c_min: Vec<usize> = members.iter().copied().filter(|&w| g.length(w) == d_c).collect();
            let cuspidal = members.iter().all(|&w| g.support(w) == full);
            classes.push(ConjClass {
                representative: start,
                size: members.len(),
                element_order: g.element_order(start),
                d_c,
                c_min,
                cuspidal,
                elements: members,
            });
        }
        let involutions = (0..n).filter(|&w| g.inverse(w) == w).collect();
        ConjugacyAnalysis { classes, class_of, involutions }
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    /// `class_of(rep^p)` for `p = 0..order`, per class.
    pub fn power_maps(&self, g: &Group) -> Vec<Vec<usize>> {
        self.classes
            .iter()
            .map(|c| {
                let mut out = Vec::with_capacity(c.element_order);
                let mut p = 0;
                for _ in 0..c.element_order {
                    out.push(self.class_of[p] as usize);
                    p = g.mul(p, c.representative);
                }
                out
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a2_classes() {
        let g = Group::from_spec("A2").unwrap();
        let c = ConjugacyAnalysis::new(&g);
        let sizes: Vec<usize> = c.classes.iter().map(|c| c.size).collect();
        assert_eq!(sizes, vec![1, 3, 2]);
        assert_eq!(c.involutions.len(), 4);
        assert!(c.classes[2].cuspidal);
        assert!(!c.classes[1].cuspidal);
    }

    #[test]
    fn i2_4_classes() {
        let g = Group::from_spec("I2(4)").unwrap();
        let c = ConjugacyAnalysis::new(&g);
        assert_eq!(c.num_classes(), 5);
        let w0 = g.longest();
        assert_eq!(c.classes[c.class_of[w0] as usize].size, 1);
    }

    #[test]
    fn class_sizes_divide_order() {
        for spec in ["B3", "D4", "H3", "F4"] {
            let g = Group::from_spec(spec).unwrap();
            let c = ConjugacyAnalysis::new(&g);
            assert_eq!(c.classes.iter().map(|c| c.size).sum::<usize>(), g.order());
            for cl in &c.classes {
                assert_eq!(g.order() % cl.size, 0);
            }
        }
    }
}
