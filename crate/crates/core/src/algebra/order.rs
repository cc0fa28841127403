use std::cmp::Ordering;

use super::mono::Mono;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OrderKind {
    /// Graded reverse lexicographic.
    Grevlex,
    Lex,
    /// Local degree order for standard bases in the localization at the
    /// origin: lower total degree is larger, ties broken by grevlex.
    LocalAntigraded,
    /// Elimination order: grevlex on the first `block` variables (in
    /// priority order), ties broken by grevlex on the remaining ones.
    Elimination { block: usize },
}

/// A monomial order together with a variable priority permutation:
/// `priority[0]` is the most significant variable.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialOrder {
    kind: OrderKind,
    priority: Vec<usize>,
}

impl MonomialOrder {
    pub fn new(kind: OrderKind, nvars: usize) -> Self {
        MonomialOrder { kind, priority: (0..nvars).collect() }
    }

    pub fn grevlex(nvars: usize) -> Self {
        Self::new(OrderKind::Grevlex, nvars)
    }

    pub fn lex(nvars: usize) -> Self {
        Self::new(OrderKind::Lex, nvars)
    }

    pub fn local(nvars: usize) -> Self {
        Self::new(OrderKind::LocalAntigraded, nvars)
    }

    pub fn elimination(block: usize, nvars: usize) -> Self {
        Self::new(OrderKind::Elimination { block }, nvars)
    }

    /// Panics unless `priority` is a permutation of `0..n`.
    pub fn with_priority(kind: OrderKind, priority: Vec<usize>) -> Self {
        let mut seen = vec![false; priority.len()];
        for &p in &priority {
            assert!(p < seen.len() && !seen[p], "variable priority must be a permutation");
            seen[p] = true;
        }
        MonomialOrder { kind, priority }
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn nvars(&self) -> usize {
        self.priority.len()
    }

    pub fn is_global(&self) -> bool {
        !matches!(self.kind, OrderKind::LocalAntigraded)
    }

    pub fn cmp(&self, a: &Mono, b: &Mono) -> Ordering {
        match self.kind {
            OrderKind::Grevlex => grevlex(&self.priority, a, b),
            OrderKind::Lex => {
                for &v in &self.priority {
                    match a.exp(v).cmp(&b.exp(v)) {
                        Ordering::Equal => continue,
                        o => return o,
                    }
                }
                Ordering::Equal
            }
            OrderKind::LocalAntigraded => {
                b.degree().cmp(&a.degree()).then_with(|| grevlex(&self.priority, a, b))
            }
            OrderKind::Elimination { block } => {
                let (head, tail) = self.priority.split_at(block.min(self.priority.len()));
                grevlex(head, a, b).then_with(|| grevlex(tail, a, b))
            }
        }
    }
}

fn grevlex(vars: &[usize], a: &Mono, b: &Mono) -> Ordering {
    let da: u32 = vars.iter().map(|&v| a.exp(v)).sum();
    let db: u32 = vars.iter().map(|&v| b.exp(v)).sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        o => return o,
    }
    for &v in vars.iter().rev() {
        match a.exp(v).cmp(&b.exp(v)) {
            Ordering::Equal => continue,
            o => return o.reverse(),
        }
    }
    Ordering::Equal
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Mono {
        Mono::from_exps(e.to_vec())
    }

    #[test]
    fn grevlex_examples() {
        let o = MonomialOrder::grevlex(3);
        // x^2 > xy > y^2 > xz > yz > z^2
        let seq = [m(&[2, 0, 0]), m(&[1, 1, 0]), m(&[0, 2, 0]), m(&[1, 0, 1]), m(&[0, 1, 1]), m(&[0, 0, 2])];
        for w in seq.windows(2) {
            assert_eq!(o.cmp(&w[0], &w[1]), Ordering::Greater, "{:?} vs {:?}", w[0], w[1]);
        }
    }

    #[test]
    fn local_prefers_low_degree() {
        let o = MonomialOrder::local(2);
        assert_eq!(o.cmp(&m(&[1, 0]), &m(&[2, 0])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[0, 0]), &m(&[0, 1])), Ordering::Greater);
    }

    #[test]
    fn elimination_block_dominates() {
        let o = MonomialOrder::elimination(1, 3);
        assert_eq!(o.cmp(&m(&[1, 0, 0]), &m(&[0, 5, 5])), Ordering::Greater);
    }

    #[test]
    fn priority_permutation_changes_lex() {
        let o = MonomialOrder::with_priority(OrderKind::Lex, vec![2, 1, 0]);
        assert_eq!(o.cmp(&m(&[0, 0, 1]), &m(&[5, 0, 0])), Ordering::Greater);
    }
}
