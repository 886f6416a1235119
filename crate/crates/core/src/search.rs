//! Backtracking enumeration over finite choice sequences.
//!
//! Variables are assigned in index order. The domain of variable `i` may
//! depend on the values already chosen for variables `0..i`, and every check
//! registered at `i` runs as soon as variable `i` has a value.

type Domain<'a> = Box<dyn Fn(&[usize]) -> Vec<usize> + Send + Sync + 'a>;
type Check<'a> = Box<dyn Fn(&[usize]) -> bool + Send + Sync + 'a>;

#[derive(Default)]
pub struct Search<'a> {
    domains: Vec<Domain<'a>>,
    checks: Vec<Vec<Check<'a>>>,
}

impl<'a> Search<'a> {
    pub fn new() -> Self {
        Search {
            domains: Vec::new(),
            checks: Vec::new(),
        }
    }

    /// Adds a variable and returns its index.
    pub fn var(&mut self, domain: impl Fn(&[usize]) -> Vec<usize> + Send + Sync + 'a) -> usize {
        self.domains.push(Box::new(domain));
        self.checks.push(Vec::new());
        self.domains.len() - 1
    }

    /// Adds a variable with a fixed domain `0..size`.
    pub fn range_var(&mut self, size: usize) -> usize {
        self.var(move |_| (0..size).collect())
    }

    /// Registers a check that runs once every variable in `deps` is set.
    pub fn check(
        &mut self,
        deps: &[usize],
        pred: impl Fn(&[usize]) -> bool + Send + Sync + 'a,
    ) {
        let at = deps.iter().copied().max().unwrap_or(0);
        if self.checks.is_empty() {
            // no variables: the check constrains the single empty assignment
            self.var(|_| vec![0]);
        }
        self.checks[at].push(Box::new(pred));
    }

    pub fn len(&self) -> usize {
        self.domains.len()
    }

    pub fn is_empty(&self) -> bool {
        self.domains.is_empty()
    }

    /// All complete assignments in lexicographic order of domain position,
    /// stopping once `limit` solutions are found.
    pub fn solve(&self, limit: Option<usize>) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut current = Vec::with_capacity(self.domains.len());
        self.go(&mut current, &mut out, limit);
        out
    }

    pub fn count(&self) -> usize {
        self.solve(None).len()
    }

    fn go(&self, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>, limit: Option<usize>) -> bool {
        if limit.is_some_and(|l| out.len() >= l) {
            return false;
        }
        let i = current.len();
        if i == self.domains.len() {
            out.push(current.clone());
            return true;
        }
        for v in (self.domains[i])(current) {
            current.push(v);
            if self.checks[i].iter().all(|c| c(current)) && !self.go(current, out, limit) {
                current.pop();
                return false;
            }
            current.pop();
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumerates_increasing_pairs() {
        let mut s = Search::new();
        let a = s.range_var(4);
        let b = s.var(move |cur| (cur[a]..4).collect());
        s.check(&[a, b], move |cur| cur[a] != cur[b]);
        let sols = s.solve(None);
        assert_eq!(sols.len(), 6);
        assert_eq!(sols[0], vec![0, 1]);
    }

    #[test]
    fn limit_stops_early() {
        let mut s = Search::new();
        s.range_var(10);
        s.range_var(10);
        assert_eq!(s.solve(Some(7)).len(), 7);
    }

    #[test]
    fn empty_search_has_one_solution() {
        let s = Search::new();
        assert_eq!(s.solve(None), vec![Vec::<usize>::new()]);
    }
}
