//! Basic, inner, and outer moves on root ideals.
//!
//! A move removes a minimal root `[a,b]` from an ideal `I` (or, read
//! backwards, adds it to the smaller ideal). Each kind licenses the removal
//! on the left side (a condition at index `a-1`) or the right side (at `b+1`):
//!
//! | kind  | left (`a >= 2`)                  | right (`b <= n-1`)                |
//! |-------|----------------------------------|-----------------------------------|
//! | basic | `a-1` is not an endpoint         | `b+1` is not an endpoint          |
//! | inner | `a-1` is not a right endpoint    | `b+1` is not a left endpoint      |
//! | outer | `a-1` is not a left endpoint     | `b+1` is not a right endpoint     |
//!
//! so a basic move on a side is exactly an inner and an outer move there.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::ideal::RootIdeal;
use crate::root::Root;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MoveKind {
    Basic,
    Inner,
    Outer,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Left,
    Right,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    Remove,
    Add,
}

impl MoveKind {
    pub const ALL: [MoveKind; 3] = [MoveKind::Basic, MoveKind::Inner, MoveKind::Outer];
}

/// Whether removing the minimal root `root` of `ideal` is licensed by `kind`
/// on `side`. The single place where endpoint conditions are spelled out.
pub fn licensed(ideal: &RootIdeal, root: Root, kind: MoveKind, side: Side) -> bool {
    if !ideal.min_roots().contains(&root) {
        return false;
    }
    let n = ideal.rank().n();
    match side {
        Side::Left => {
            if root.i < 2 {
                return false;
            }
            let k = root.i - 1;
            match kind {
                MoveKind::Basic => !ideal.is_left_endpoint(k) && !ideal.is_right_endpoint(k),
                MoveKind::Inner => !ideal.is_right_endpoint(k),
                MoveKind::Outer => !ideal.is_left_endpoint(k),
            }
        }
        Side::Right => {
            if root.j + 1 > n {
                return false;
            }
            let k = root.j + 1;
            match kind {
                MoveKind::Basic => !ideal.is_left_endpoint(k) && !ideal.is_right_endpoint(k),
                MoveKind::Inner => !ideal.is_left_endpoint(k),
                MoveKind::Outer => !ideal.is_right_endpoint(k),
            }
        }
    }
}

/// All `(root, side)` pairs licensing a removal of `kind`.
pub fn move_candidates(ideal: &RootIdeal, kind: MoveKind) -> Vec<(Root, Side)> {
    let mut out = Vec::new();
    for &root in ideal.min_roots() {
        for side in [Side::Left, Side::Right] {
            if licensed(ideal, root, kind, side) {
                out.push((root, side));
            }
        }
    }
    out
}

pub fn basic_move_candidates(ideal: &RootIdeal) -> Vec<(Root, Side)> {
    move_candidates(ideal, MoveKind::Basic)
}

pub fn inner_move_candidates(ideal: &RootIdeal) -> Vec<(Root, Side)> {
    move_candidates(ideal, MoveKind::Inner)
}

pub fn outer_move_candidates(ideal: &RootIdeal) -> Vec<(Root, Side)> {
    move_candidates(ideal, MoveKind::Outer)
}

/// Ideals reachable by licensed removals (each removed root counted once).
pub fn remove_neighbors(ideal: &RootIdeal, kind: MoveKind) -> Vec<RootIdeal> {
    let mut out = Vec::new();
    for &root in ideal.min_roots() {
        if licensed(ideal, root, kind, Side::Left) || licensed(ideal, root, kind, Side::Right) {
            out.push(ideal.remove_minimal(root).expect("minimal root"));
        }
    }
    out
}

/// Larger ideals `J` with `ideal` among the remove-neighbors of `J`.
pub fn add_neighbors(ideal: &RootIdeal, kind: MoveKind) -> Vec<RootIdeal> {
    ideal
        .addable_roots()
        .into_iter()
        .filter_map(|root| {
            let bigger = ideal.add_minimal(root)?;
            let ok = licensed(&bigger, root, kind, Side::Left) || licensed(&bigger, root, kind, Side::Right);
            ok.then_some(bigger)
        })
        .collect()
}

/// Undirected adjacency in the move graph of `kind`.
pub fn neighbors(ideal: &RootIdeal, kind: MoveKind) -> Vec<RootIdeal> {
    let mut out = remove_neighbors(ideal, kind);
    out.extend(add_neighbors(ideal, kind));
    out
}

/// One step in a move trace.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Move {
    pub kind: MoveKind,
    pub side: Side,
    /// The root removed from the larger ideal of the pair.
    pub root: Root,
    pub direction: Direction,
}

impl Move {
    /// Replays the move, checking its licence.
    ///
    /// For `Remove`, `root` must be minimal in `ideal` and licensed there.
    /// For `Add`, the larger ideal `ideal + root` must license its removal.
    pub fn apply(&self, ideal: &RootIdeal) -> Result<RootIdeal> {
        let illegal = || Error::IllegalMove {
            mv: self.to_string(),
            ideal: ideal.to_string(),
        };
        match self.direction {
            Direction::Remove => {
                if !licensed(ideal, self.root, self.kind, self.side) {
                    return Err(illegal());
                }
                ideal.remove_minimal(self.root).ok_or_else(illegal)
            }
            Direction::Add => {
                let bigger = ideal.add_minimal(self.root).ok_or_else(illegal)?;
                if !licensed(&bigger, self.root, self.kind, self.side) {
                    return Err(illegal());
                }
                Ok(bigger)
            }
        }
    }

    /// A licensed move of `kind` taking `from` to `to`, if the two are adjacent.
    pub fn between(from: &RootIdeal, to: &RootIdeal, kind: MoveKind) -> Option<Move> {
        for (larger, smaller, direction) in [(from, to, Direction::Remove), (to, from, Direction::Add)] {
            for &root in larger.min_roots() {
                if larger.remove_minimal(root).as_ref() != Some(smaller) {
                    continue;
                }
                for side in [Side::Left, Side::Right] {
                    if licensed(larger, root, kind, side) {
                        return Some(Move {
                            kind,
                            side,
                            root,
                            direction,
                        });
                    }
                }
            }
        }
        None
    }
}

/// Replays a trace from `start`, validating each step; returns every ideal visited.
pub fn replay(start: &RootIdeal, moves: &[Move]) -> Result<Vec<RootIdeal>> {
    let mut path = vec![start.clone()];
    for mv in moves {
        let next = mv.apply(path.last().expect("non-empty"))?;
        path.push(next);
    }
    Ok(path)
}

/// Breadth-first search in the move graph of `kind` from `start` to the first
/// ideal satisfying `goal`; returns it with a shortest witness trace.
pub fn shortest_path_to<F>(start: &RootIdeal, kind: MoveKind, goal: F) -> Option<(RootIdeal, Vec<Move>)>
where
    F: Fn(&RootIdeal) -> bool,
{
    if goal(start) {
        return Some((start.clone(), Vec::new()));
    }
    let mut parent: HashMap<RootIdeal, (RootIdeal, Move)> = HashMap::new();
    let mut queue = VecDeque::from([start.clone()]);
    while let Some(cur) = queue.pop_front() {
        for next in neighbors(&cur, kind) {
            if next == *start || parent.contains_key(&next) {
                continue;
            }
            let mv = Move::between(&cur, &next, kind).expect("neighbors are adjacent");
            parent.insert(next.clone(), (cur.clone(), mv));
            if goal(&next) {
                let mut moves = Vec::new();
                let mut at = next.clone();
                while let Some((prev, mv)) = parent.get(&at) {
                    moves.push(*mv);
                    at = prev.clone();
                }
                moves.reverse();
                return Some((next, moves));
            }
            queue.push_back(next);
        }
    }
    None
}

pub fn shortest_path(from: &RootIdeal, to: &RootIdeal, kind: MoveKind) -> Option<Vec<Move>> {
    shortest_path_to(from, kind, |i| i == to).map(|(_, moves)| moves)
}

/// A parabolic nilradical in the basic-move class of `ideal`, with a
/// shortest witness trace.
pub fn normalize_to_parabolic(ideal: &RootIdeal) -> (RootIdeal, Vec<Move>) {
    shortest_path_to(ideal, MoveKind::Basic, RootIdeal::is_parabolic)
        .expect("every basic-move class contains a parabolic nilradical")
}

impl fmt::Display for MoveKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MoveKind::Basic => "basic",
            MoveKind::Inner => "inner",
            MoveKind::Outer => "outer",
        })
    }
}

impl FromStr for MoveKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "basic" => Ok(MoveKind::Basic),
            "inner" => Ok(MoveKind::Inner),
            "outer" => Ok(MoveKind::Outer),
            _ => Err(Error::Parse(format!("unknown move kind `{s}`"))),
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Left => "left",
            Side::Right => "right",
        })
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Direction::Remove => "remove",
            Direction::Add => "add",
        })
    }
}

/// Trace line format: `kind side [a,b] remove|add`.
impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {} {}", self.kind, self.side, self.root, self.direction)
    }
}

impl FromStr for Move {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let fields: Vec<&str> = s.split_whitespace().collect();
        let [kind, side, root, direction] = fields.as_slice() else {
            return Err(Error::Parse(format!(
                "expected `kind side [a,b] remove|add`, got `{s}`"
            )));
        };
        let side = match *side {
            "left" => Side::Left,
            "right" => Side::Right,
            _ => return Err(Error::Parse(format!("unknown side `{side}`"))),
        };
        let direction = match *direction {
            "remove" => Direction::Remove,
            "add" => Direction::Add,
            _ => return Err(Error::Parse(format!("unknown direction `{direction}`"))),
        };
        Ok(Move {
            kind: kind.parse()?,
            side,
            root: root.parse()?,
            direction,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root::Rank;

    fn ideal(s: &str, n: usize) -> RootIdeal {
        RootIdeal::parse(s, Rank(n)).unwrap()
    }

    #[test]
    fn basic_candidates_examples() {
        let c = basic_move_candidates(&ideal("[2,2]", 3));
        assert_eq!(c, vec![(Root::simple(2), Side::Left), (Root::simple(2), Side::Right)]);
        assert!(basic_move_candidates(&RootIdeal::full(Rank(3))).is_empty());
        assert!(basic_move_candidates(&RootIdeal::empty(Rank(3))).is_empty());
    }

    #[test]
    fn inner_outer_examples() {
        let i = ideal("[2,2]", 3);
        assert_eq!(inner_move_candidates(&i).len(), 2);
        assert_eq!(outer_move_candidates(&i).len(), 2);
        assert!(inner_move_candidates(&RootIdeal::empty(Rank(3))).is_empty());
        assert!(outer_move_candidates(&RootIdeal::empty(Rank(3))).is_empty());
        // [1,2],[2,3]: removing [2,3] on the left looks at index 1, a left
        // endpoint only, so inner allows it and outer does not.
        let j = ideal("[1,2],[2,3]", 3);
        assert!(licensed(&j, Root { i: 2, j: 3 }, MoveKind::Inner, Side::Left));
        assert!(!licensed(&j, Root { i: 2, j: 3 }, MoveKind::Outer, Side::Left));
        assert!(!licensed(&j, Root { i: 2, j: 3 }, MoveKind::Basic, Side::Left));
    }

    #[test]
    fn worked_neighbors_in_a3() {
        let n = neighbors(&ideal("[2,2]", 3), MoveKind::Basic);
        assert!(n.contains(&ideal("[1,2],[2,3]", 3)));
        let chain = [ideal("[1,1]", 3), ideal("[1,2]", 3), ideal("[1,3]", 3)];
        for w in chain.windows(2) {
            assert!(neighbors(&w[0], MoveKind::Basic).contains(&w[1]));
            assert!(neighbors(&w[1], MoveKind::Basic).contains(&w[0]));
        }
        assert!(remove_neighbors(&RootIdeal::empty(Rank(3)), MoveKind::Basic).is_empty());
    }

    #[test]
    fn move_apply_and_reject() {
        let i = ideal("[2,2]", 3);
        let mv: Move = "basic left [2,2] remove".parse().unwrap();
        let j = mv.apply(&i).unwrap();
        assert_eq!(j, ideal("[1,2],[2,3]", 3));
        let back = Move {
            direction: Direction::Add,
            ..mv
        };
        assert_eq!(back.apply(&j).unwrap(), i);
        let bad: Move = "basic left [1,1] remove".parse().unwrap();
        assert!(bad.apply(&RootIdeal::full(Rank(3))).is_err());
        assert_eq!(mv.to_string(), "basic left [2,2] remove");
    }

    #[test]
    fn normalize_examples() {
        let i = ideal("[2,2]", 3);
        assert_eq!(normalize_to_parabolic(&i), (i.clone(), Vec::new()));
        let start = ideal("[1,2],[2,3]", 3);
        let (target, moves) = normalize_to_parabolic(&start);
        assert!(target.is_parabolic());
        assert_eq!(replay(&start, &moves).unwrap().last().unwrap(), &target);
    }
}
