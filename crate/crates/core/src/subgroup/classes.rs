use super::SubgroupSet;
use crate::bitset::Bitset;
use crate::group::GroupRep;

/// Conjugacy classes, numbered by their least element index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyClassData {
    pub classes: Vec<Vec<usize>>,
    pub class_of: Vec<usize>,
    pub centralizer_order: Vec<usize>,
}

impl ConjugacyClassData {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn size(&self, c: usize) -> usize {
        self.classes[c].len()
    }

    pub fn representative(&self, c: usize) -> usize {
        self.classes[c][0]
    }
}

/// Orbits under conjugation by the group generators.
pub fn conjugacy_classes(g: &GroupRep) -> ConjugacyClassData {
    let n = g.order();
    let mut class_of = vec![usize::MAX; n];
    let mut classes = Vec::new();
    for start in 0..n {
        if class_of[start] != usize::MAX {
            continue;
        }
        let id = classes.len();
        class_of[start] = id;
        let mut orbit = vec![start];
        let mut head = 0;
        while head < orbit.len() {
            let x = orbit[head];
            head += 1;
            for &s in g.generators() {
                let y = g.conjugate(x, s);
                if class_of[y] == usize::MAX {
                    class_of[y] = id;
                    orbit.push(y);
                }
            }
        }
        orbit.sort_unstable();
        classes.push(orbit);
    }
    let centralizer_order = classes.iter().map(|c| n / c.len()).collect();
    ConjugacyClassData {
        classes,
        class_of,
        centralizer_order,
    }
}

/// `Z(G)`: the union of the singleton classes.
pub fn center(g: &GroupRep) -> SubgroupSet {
    let cls = conjugacy_classes(g);
    let members = Bitset::from_indices(
        g.order(),
        cls.classes.iter().filter(|c| c.len() == 1).map(|c| c[0]),
    );
    SubgroupSet::from_closed(g, members)
}
