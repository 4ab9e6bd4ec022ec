use crate::model::{BoundFormula, Formula, ModelError, World, ATOM_LIMIT};

use super::SolverError;

/// The possible worlds of an argument: every assignment satisfying all constraints.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstituentSpace {
    pub atoms: Vec<String>,
    pub worlds: Vec<World>,
}

impl ConstituentSpace {
    pub fn len(&self) -> usize {
        self.worlds.len()
    }

    pub fn is_empty(&self) -> bool {
        self.worlds.is_empty()
    }

    pub fn bind(&self, formula: &Formula) -> Result<BoundFormula, ModelError> {
        formula.bind(&self.atoms)
    }

    /// Indicator vector of `formula` over the worlds.
    pub fn indicator(&self, formula: &BoundFormula) -> Vec<bool> {
        self.worlds.iter().map(|w| formula.holds(*w)).collect()
    }
}

/// Lists the satisfying assignments in lexicographic order over the atom
/// list, with `true` before `false` (the first world makes every atom true).
pub fn enumerate_constituents(
    atoms: &[String],
    constraints: &[Formula],
    max_atoms: usize,
) -> Result<ConstituentSpace, SolverError> {
    let budget = max_atoms.min(ATOM_LIMIT);
    if atoms.len() > budget {
        return Err(ModelError::AtomBudgetExceeded { atoms: atoms.len(), budget }.into());
    }
    let bound = constraints.iter().map(|c| c.bind(atoms)).collect::<Result<Vec<_>, _>>()?;
    let n = atoms.len();
    let worlds: Vec<World> = (0..1u64 << n)
        .map(|rank| {
            // bit (n-1-i) of the rank set means atom i is false
            World((0..n).filter(|i| (rank >> (n - 1 - i)) & 1 == 0).fold(0, |acc, i| acc | 1 << i))
        })
        .filter(|w| bound.iter().all(|c| c.holds(*w)))
        .collect();
    if worlds.is_empty() {
        return Err(SolverError::EmptySpace);
    }
    Ok(ConstituentSpace { atoms: atoms.to_vec(), worlds })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::DEFAULT_MAX_ATOMS;

    fn names(list: &[&str]) -> Vec<String> {
        list.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn ellsberg_partition_has_three_worlds() {
        let atoms = names(&["R", "B", "Y"]);
        let colors: Vec<_> = atoms.iter().map(Formula::atom).collect();
        let space = enumerate_constituents(&atoms, &[Formula::exactly_one(&colors)], DEFAULT_MAX_ATOMS).unwrap();
        let described: Vec<_> = space.worlds.iter().map(|w| w.describe(&atoms)).collect();
        assert_eq!(described, vec!["R ¬B ¬Y", "¬R B ¬Y", "¬R ¬B Y"]);
    }

    #[test]
    fn unconstrained_pair_has_four_worlds_in_truth_table_order() {
        let atoms = names(&["T", "H"]);
        let space = enumerate_constituents(&atoms, &[], DEFAULT_MAX_ATOMS).unwrap();
        let described: Vec<_> = space.worlds.iter().map(|w| w.describe(&atoms)).collect();
        assert_eq!(described, vec!["T H", "T ¬H", "¬T H", "¬T ¬H"]);
    }

    #[test]
    fn contradiction_gives_empty_space() {
        let atoms = names(&["A"]);
        let a = Formula::atom("A");
        let err = enumerate_constituents(&atoms, &[a.clone().and(a.not())], DEFAULT_MAX_ATOMS).unwrap_err();
        assert_eq!(err, SolverError::EmptySpace);
    }

    #[test]
    fn budget_exceeded() {
        let atoms: Vec<String> = (0..6).map(|i| format!("A{i}")).collect();
        let err = enumerate_constituents(&atoms, &[], 5).unwrap_err();
        assert_eq!(err, SolverError::Model(ModelError::AtomBudgetExceeded { atoms: 6, budget: 5 }));
        assert_eq!(enumerate_constituents(&atoms, &[], 6).unwrap().len(), 64);
    }

    #[test]
    fn worlds_are_distinct_and_complete() {
        let atoms: Vec<String> = (0..5).map(|i| format!("A{i}")).collect();
        let space = enumerate_constituents(&atoms, &[], DEFAULT_MAX_ATOMS).unwrap();
        let mut sorted = space.worlds.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), 32);
    }
}
