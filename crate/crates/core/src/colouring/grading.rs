//! Grades, spheres and clusters of a contact graph around a base hyperplane.

use serde::{Deserialize, Serialize};

use crate::graph::{SimpleGraph, UNREACHABLE};

/// BFS grading of a contact graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Grading {
    /// Base hyperplane.
    pub base: usize,
    /// Grade per hyperplane, [`UNREACHABLE`] outside the base component.
    pub grade: Vec<usize>,
    /// Sorted members of each sphere `S_r`.
    pub spheres: Vec<Vec<usize>>,
    /// Clusters of each sphere, each sorted, ordered by smallest member.
    pub clusters: Vec<Vec<Vec<usize>>>,
}

impl Grading {
    /// Largest grade.
    pub fn max_grade(&self) -> usize {
        self.spheres.len().saturating_sub(1)
    }

    /// Members of the ball `B_r`.
    pub fn ball(&self, r: usize) -> Vec<usize> {
        (0..self.grade.len()).filter(|&h| self.grade[h] <= r).collect()
    }
}

/// Grades every hyperplane by its distance to `base` in `gamma`.
///
/// Two hyperplanes of grade `r` share a cluster when a path of `gamma`
/// through hyperplanes of grade at least `r` joins them.
pub fn grade(gamma: &SimpleGraph, base: usize) -> Grading {
    let grade = gamma.bfs(base);
    let top = grade.iter().copied().filter(|&g| g != UNREACHABLE).max().unwrap_or(0);
    let mut spheres = vec![Vec::new(); top + 1];
    for (h, &g) in grade.iter().enumerate() {
        if g != UNREACHABLE {
            spheres[g].push(h);
        }
    }
    let mut clusters = Vec::with_capacity(top + 1);
    for r in 0..=top {
        let mut label = vec![UNREACHABLE; gamma.n()];
        let mut found: Vec<Vec<usize>> = Vec::new();
        for &s in &spheres[r] {
            if label[s] != UNREACHABLE {
                continue;
            }
            let id = found.len();
            let mut members = Vec::new();
            label[s] = id;
            let mut stack = vec![s];
            while let Some(x) = stack.pop() {
                if grade[x] == r {
                    members.push(x);
                }
                for &y in gamma.neighbours(x) {
                    if label[y] == UNREACHABLE && grade[y] != UNREACHABLE && grade[y] >= r {
                        label[y] = id;
                        stack.push(y);
                    }
                }
            }
            members.sort_unstable();
            found.push(members);
        }
        clusters.push(found);
    }
    Grading { base, grade, spheres, clusters }
}

/// Largest distance in `gamma` between two members of one cluster.
pub fn max_cluster_diameter(gamma: &SimpleGraph, grading: &Grading) -> usize {
    let mut worst = 0;
    for sphere in &grading.clusters {
        for cluster in sphere {
            for &a in cluster {
                let d = gamma.bfs(a);
                for &b in cluster {
                    worst = worst.max(d[b]);
                }
            }
        }
    }
    worst
}
