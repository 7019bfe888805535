//! Deterministic fan-out over a slice: contiguous chunks, one scoped thread
//! per chunk, results concatenated back in input order. Output never depends
//! on the worker count.

pub(crate) fn par_map<T, U, F>(jobs: usize, items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync,
{
    let jobs = jobs.max(1).min(items.len().max(1));
    if jobs == 1 {
        return items.iter().map(&f).collect();
    }
    let chunk = items.len().div_ceil(jobs);
    let mut parts: Vec<Vec<U>> = Vec::new();
    std::thread::scope(|scope| {
        let handles: Vec<_> = items
            .chunks(chunk)
            .map(|c| scope.spawn(|| c.iter().map(&f).collect::<Vec<U>>()))
            .collect();
        parts = handles.into_iter().map(|h| h.join().unwrap()).collect();
    });
    parts.into_iter().flatten().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn preserves_order_for_any_job_count() {
        let items: Vec<u32> = (0..37).collect();
        let expect: Vec<u32> = items.iter().map(|x| x * x).collect();
        for jobs in [0, 1, 2, 3, 8, 64] {
            assert_eq!(par_map(jobs, &items, |x| x * x), expect, "jobs = {jobs}");
        }
        assert_eq!(par_map(4, &Vec::<u32>::new(), |x| x + 1), Vec::<u32>::new());
    }
}
