/// A subgroup of a `FiniteGroup`, stored as a membership bitmap over the
/// parent's element indices together with the sorted member list.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subgroup {
    member: Vec<bool>,
    elements: Vec<usize>,
}

impl Subgroup {
    /// Wrap a membership bitmap. The caller guarantees closure.
    pub fn from_members(member: Vec<bool>) -> Self {
        let elements = member
            .iter()
            .enumerate()
            .filter_map(|(i, &m)| m.then_some(i))
            .collect();
        Subgroup { member, elements }
    }

    pub fn trivial(parent_order: usize) -> Self {
        let mut member = vec![false; parent_order];
        member[0] = true;
        Self::from_members(member)
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn parent_order(&self) -> usize {
        self.member.len()
    }

    #[inline]
    pub fn contains(&self, g: usize) -> bool {
        self.member[g]
    }

    /// Members in increasing index order (the identity first).
    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.elements.iter().all(|&x| other.contains(x))
    }

    pub fn intersection(&self, other: &Subgroup) -> Subgroup {
        let member = self
            .member
            .iter()
            .zip(other.member.iter())
            .map(|(&a, &b)| a && b)
            .collect();
        Subgroup::from_members(member)
    }

    /// Check closure under the parent multiplication.
    pub fn is_closed(&self, g: &super::FiniteGroup) -> bool {
        self.contains(0)
            && self.elements.iter().all(|&a| {
                self.contains(g.inv(a)) && self.elements.iter().all(|&b| self.contains(g.mul(a, b)))
            })
    }
}
