use std::sync::atomic::{AtomicUsize, Ordering};

const BLOCK: usize = 256;

/// Smallest index in `0..count` for which `f` returns `Some`, scanning with
/// up to `workers` threads. The answer never depends on the worker count.
pub(crate) fn first_hit<T, F>(count: usize, workers: usize, f: F) -> Option<(usize, T)>
where
    T: Send,
    F: Fn(usize) -> Option<T> + Sync,
{
    if workers <= 1 || count <= BLOCK {
        return (0..count).find_map(|i| f(i).map(|t| (i, t)));
    }
    let next = AtomicUsize::new(0);
    let best = AtomicUsize::new(usize::MAX);
    let results: Vec<Option<(usize, T)>> = std::thread::scope(|s| {
        let handles: Vec<_> = (0..workers)
            .map(|_| {
                s.spawn(|| {
                    let mut mine: Option<(usize, T)> = None;
                    loop {
                        let start = next.fetch_add(BLOCK, Ordering::Relaxed);
                        if start >= count || start >= best.load(Ordering::Relaxed) {
                            break;
                        }
                        for i in start..(start + BLOCK).min(count) {
                            if let Some(t) = f(i) {
                                best.fetch_min(i, Ordering::Relaxed);
                                if mine.as_ref().map_or(true, |(j, _)| i < *j) {
                                    mine = Some((i, t));
                                }
                                break;
                            }
                        }
                    }
                    mine
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("worker panicked")).collect()
    });
    results.into_iter().flatten().min_by_key(|(i, _)| *i)
}

#[cfg(test)]
mod tests {
    use super::first_hit;

    #[test]
    fn same_answer_for_any_worker_count() {
        let hits = |i: usize| (i % 997 == 5 && i > 3000).then_some(i * 2);
        let serial = first_hit(100_000, 1, hits);
        assert_eq!(serial, Some((3993, 7986)));
        for w in 2..6 {
            assert_eq!(first_hit(100_000, w, hits), serial);
        }
        assert_eq!(first_hit(10_000, 4, |_| None::<()>), None);
    }
}
