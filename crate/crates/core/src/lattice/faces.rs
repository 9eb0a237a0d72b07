//! Face traversal of the rotation system carried by a diagram.
//!
//! Around each element the clockwise order is: upper covers left to right,
//! then lower covers right to left. Faces are traced with the face on the
//! left of each dart, so interior faces are walked counterclockwise (up the
//! right chain, down the left chain) and the outer face goes up the left
//! boundary and down the right boundary.

use std::collections::HashMap;

/// A directed edge `(from, to)` of the cover graph.
pub type Dart = (usize, usize);

/// Every face of the rotation system as its cyclic dart sequence.
///
/// Assumes indices are in range and `up`/`down` describe the same edge set.
pub fn trace_faces(up: &[Vec<usize>], down: &[Vec<usize>]) -> Vec<Vec<Dart>> {
    let n = up.len();
    // clockwise rotation per vertex and position lookup
    let rot: Vec<Vec<usize>> = (0..n)
        .map(|v| up[v].iter().chain(down[v].iter().rev()).copied().collect())
        .collect();
    let pos: Vec<HashMap<usize, usize>> = rot
        .iter()
        .map(|r| r.iter().enumerate().map(|(i, &w)| (w, i)).collect())
        .collect();

    let mut darts: Vec<Dart> = Vec::new();
    for (x, ys) in up.iter().enumerate() {
        for &y in ys {
            darts.push((x, y));
            darts.push((y, x));
        }
    }
    darts.sort_unstable();
    let index: HashMap<Dart, usize> = darts.iter().enumerate().map(|(i, &d)| (d, i)).collect();
    let mut seen = vec![false; darts.len()];
    let mut faces = Vec::new();
    for start in 0..darts.len() {
        if seen[start] {
            continue;
        }
        let mut face = Vec::new();
        let mut cur = start;
        while !seen[cur] {
            seen[cur] = true;
            let (u, v) = darts[cur];
            face.push((u, v));
            let r = &rot[v];
            let Some(&p) = pos[v].get(&u) else { break };
            let w = r[(p + 1) % r.len()];
            match index.get(&(v, w)) {
                Some(&next) => cur = next,
                None => break,
            }
        }
        faces.push(face);
    }
    faces
}

/// Index of the face containing `dart`.
pub fn face_of(faces: &[Vec<Dart>], dart: Dart) -> Option<usize> {
    faces.iter().position(|f| f.contains(&dart))
}

/// Splits a face walked counterclockwise into `(bottom, top, left, right)`
/// chains (both bottom-to-top, inclusive), or `None` when the face boundary
/// is not exactly one ascending run followed by one descending run.
pub fn split_bimodal(face: &[Dart], is_up: impl Fn(Dart) -> bool) -> Option<(Vec<usize>, Vec<usize>)> {
    let k = face.len();
    if k < 2 {
        return None;
    }
    let dirs: Vec<bool> = face.iter().map(|&d| is_up(d)).collect();
    // a rising run starts where the previous dart descends
    let starts: Vec<usize> = (0..k).filter(|&i| dirs[i] && !dirs[(i + k - 1) % k]).collect();
    if starts.len() != 1 {
        return None;
    }
    let s = starts[0];
    let mut right = vec![face[s].0];
    let mut i = s;
    while dirs[i % k] {
        right.push(face[i % k].1);
        i += 1;
        if i - s > k {
            return None;
        }
    }
    let mut left_desc = vec![face[i % k].0];
    while !dirs[i % k] {
        left_desc.push(face[i % k].1);
        i += 1;
        if i - s > k {
            return None;
        }
    }
    if i - s != k {
        return None;
    }
    left_desc.reverse();
    Some((left_desc, right))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn square() -> (Vec<Vec<usize>>, Vec<Vec<usize>>) {
        // 0 < 1,2 < 3 with 1 drawn left
        let up = vec![vec![1, 2], vec![3], vec![3], vec![]];
        let down = vec![vec![], vec![0], vec![0], vec![1, 2]];
        (up, down)
    }

    #[test]
    fn square_has_two_faces() {
        let (up, down) = square();
        let faces = trace_faces(&up, &down);
        assert_eq!(faces.len(), 2);
        let outer = face_of(&faces, (0, 1)).unwrap();
        assert_eq!(faces[outer], vec![(0, 1), (1, 3), (3, 2), (2, 0)]);
    }

    #[test]
    fn inner_face_splits_into_chains() {
        let (up, down) = square();
        let faces = trace_faces(&up, &down);
        let inner = face_of(&faces, (0, 2)).unwrap();
        let (left, right) = split_bimodal(&faces[inner], |(a, b)| up[a].contains(&b)).unwrap();
        assert_eq!(left, vec![0, 1, 3]);
        assert_eq!(right, vec![0, 2, 3]);
    }

    #[test]
    fn euler_count_holds_for_square() {
        let (up, down) = square();
        let faces = trace_faces(&up, &down);
        // E - V + 2 = 4 - 4 + 2
        assert_eq!(faces.len(), 2);
    }
}
