//! Wang tiles, bounded (square) tiling and corridor tiling.
//!
//! Grid coordinates are `(i, j)` with column `i` and row `j`, both from 0,
//! `(0, 0)` being the bottom-left cell. Left and right colorings run bottom
//! to top, top and bottom colorings run left to right.

use std::collections::{HashMap, HashSet, VecDeque};

use serde::{Deserialize, Serialize};

use super::ProblemError;

/// Separates tiles in the textual tile-set encoding.
pub const TILE_SEPARATOR: char = ';';
/// Separates the four colors of one tile.
pub const COLOR_SEPARATOR: char = ',';
/// Separates the entries of an edge coloring.
pub const ENTRY_SEPARATOR: char = '#';
/// Separates the tile set and the colorings in a tiling word.
const PART_SEPARATOR: char = '$';

pub const DEFAULT_CORRIDOR_NODE_CAP: usize = 2_000_000;

/// Tile type `(w, n, e, s)` as color ids.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Tile {
    pub w: usize,
    pub n: usize,
    pub e: usize,
    pub s: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TileSet {
    colors: Vec<String>,
    tiles: Vec<Tile>,
    white: Option<usize>,
    blank: Option<usize>,
    accept: Option<usize>,
}

impl TileSet {
    pub fn new(colors: Vec<String>, tiles: Vec<Tile>) -> Result<Self, ProblemError> {
        for (i, c) in colors.iter().enumerate() {
            if c.is_empty() {
                return Err(ProblemError::Invalid("colors: empty color name".into()));
            }
            if c.contains([TILE_SEPARATOR, COLOR_SEPARATOR, ENTRY_SEPARATOR, PART_SEPARATOR]) {
                return Err(ProblemError::Invalid(format!(
                    "colors: {c:?} contains a reserved separator"
                )));
            }
            if colors[..i].contains(c) {
                return Err(ProblemError::Invalid(format!("colors: duplicate color {c:?}")));
            }
        }
        let k = colors.len();
        if tiles.iter().any(|t| t.w >= k || t.n >= k || t.e >= k || t.s >= k) {
            return Err(ProblemError::Invalid("tiles: color id out of range".into()));
        }
        Ok(TileSet {
            colors,
            tiles,
            white: None,
            blank: None,
            accept: None,
        })
    }

    pub fn with_distinguished(
        mut self,
        white: Option<usize>,
        blank: Option<usize>,
        accept: Option<usize>,
    ) -> Result<Self, ProblemError> {
        if [white, blank, accept].iter().flatten().any(|&c| c >= self.colors.len()) {
            return Err(ProblemError::Invalid("distinguished color out of range".into()));
        }
        self.white = white;
        self.blank = blank;
        self.accept = accept;
        Ok(self)
    }

    pub fn colors(&self) -> &[String] {
        &self.colors
    }

    pub fn tiles(&self) -> &[Tile] {
        &self.tiles
    }

    pub fn color_name(&self, id: usize) -> &str {
        &self.colors[id]
    }

    pub fn color_id(&self, name: &str) -> Option<usize> {
        self.colors.iter().position(|c| c == name)
    }

    pub fn white(&self) -> Option<usize> {
        self.white
    }

    pub fn blank(&self) -> Option<usize> {
        self.blank
    }

    pub fn accept(&self) -> Option<usize> {
        self.accept
    }

    /// `w,n,e,s;w,n,e,s;...` with color names, tiles in order.
    pub fn serialize(&self) -> String {
        self.tiles
            .iter()
            .map(|t| {
                [t.w, t.n, t.e, t.s]
                    .map(|c| self.colors[c].as_str())
                    .join(&COLOR_SEPARATOR.to_string())
            })
            .collect::<Vec<_>>()
            .join(&TILE_SEPARATOR.to_string())
    }

    /// Inverse of [`TileSet::serialize`]; colors are numbered in order of
    /// first appearance.
    pub fn parse(text: &str) -> Result<Self, ProblemError> {
        let mut colors: Vec<String> = Vec::new();
        let mut tiles = Vec::new();
        for (i, tile) in text.split(TILE_SEPARATOR).enumerate() {
            let parts: Vec<&str> = tile.split(COLOR_SEPARATOR).collect();
            let [w, n, e, s] = parts.as_slice() else {
                return Err(ProblemError::Invalid(format!(
                    "tile {i}: expected four colors, got {}",
                    parts.len()
                )));
            };
            let mut id = |name: &str| intern(&mut colors, name);
            tiles.push(Tile {
                w: id(w),
                n: id(n),
                e: id(e),
                s: id(s),
            });
        }
        TileSet::new(colors, tiles)
    }

    pub fn to_json(&self) -> TilesJson {
        let name = |c: Option<usize>| c.map(|c| self.colors[c].clone());
        TilesJson {
            colors: self.colors.clone(),
            white: name(self.white),
            blank: name(self.blank),
            accept: name(self.accept),
            tiles: self
                .tiles
                .iter()
                .map(|t| TileJson {
                    w: self.colors[t.w].clone(),
                    n: self.colors[t.n].clone(),
                    e: self.colors[t.e].clone(),
                    s: self.colors[t.s].clone(),
                })
                .collect(),
        }
    }
}

fn intern(colors: &mut Vec<String>, name: &str) -> usize {
    match colors.iter().position(|c| c == name) {
        Some(i) => i,
        None => {
            colors.push(name.to_string());
            colors.len() - 1
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TileJson {
    pub w: String,
    pub n: String,
    pub e: String,
    pub s: String,
}

/// `{"colors":[...],"white":..,"blank":..,"accept":..,"tiles":[{"w","n","e","s"}]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TilesJson {
    pub colors: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub white: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub blank: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub accept: Option<String>,
    pub tiles: Vec<TileJson>,
}

impl TilesJson {
    pub fn into_tile_set(self) -> Result<TileSet, ProblemError> {
        let lookup = |field: &str, name: &str| {
            self.colors.iter().position(|c| c == name).ok_or_else(|| {
                ProblemError::Invalid(format!("{field}: unknown color {name:?}"))
            })
        };
        let optional = |field: &str, name: &Option<String>| name.as_deref().map(|n| lookup(field, n)).transpose();
        let mut tiles = Vec::with_capacity(self.tiles.len());
        for t in &self.tiles {
            tiles.push(Tile {
                w: lookup("tiles.w", &t.w)?,
                n: lookup("tiles.n", &t.n)?,
                e: lookup("tiles.e", &t.e)?,
                s: lookup("tiles.s", &t.s)?,
            });
        }
        let white = optional("white", &self.white)?;
        let blank = optional("blank", &self.blank)?;
        let accept = optional("accept", &self.accept)?;
        TileSet::new(self.colors, tiles)?.with_distinguished(white, blank, accept)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TilingVariant {
    Bounded,
    Corridor,
}

/// Edge-colored grid region. Corridor instances have no side colorings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TilingInstance {
    variant: TilingVariant,
    tiles: TileSet,
    width: usize,
    left: Vec<usize>,
    top: Vec<usize>,
    right: Vec<usize>,
    bottom: Vec<usize>,
}

impl TilingInstance {
    pub fn bounded(
        tiles: TileSet,
        left: Vec<usize>,
        top: Vec<usize>,
        right: Vec<usize>,
        bottom: Vec<usize>,
    ) -> Result<Self, ProblemError> {
        let width = top.len();
        if width == 0 {
            return Err(ProblemError::Invalid("width must be positive".into()));
        }
        if [&left, &right, &bottom].iter().any(|c| c.len() != width) {
            return Err(ProblemError::Invalid(
                "all four colorings must have the same length".into(),
            ));
        }
        TilingInstance {
            variant: TilingVariant::Bounded,
            tiles,
            width,
            left,
            top,
            right,
            bottom,
        }
        .checked()
    }

    pub fn corridor(tiles: TileSet, top: Vec<usize>, bottom: Vec<usize>) -> Result<Self, ProblemError> {
        let width = top.len();
        if width == 0 {
            return Err(ProblemError::Invalid("width must be positive".into()));
        }
        if bottom.len() != width {
            return Err(ProblemError::Invalid(
                "top and bottom colorings must have the same length".into(),
            ));
        }
        TilingInstance {
            variant: TilingVariant::Corridor,
            tiles,
            width,
            left: Vec::new(),
            top,
            right: Vec::new(),
            bottom,
        }
        .checked()
    }

    fn checked(self) -> Result<Self, ProblemError> {
        let k = self.tiles.colors.len();
        let all = self.left.iter().chain(&self.top).chain(&self.right).chain(&self.bottom);
        if all.into_iter().any(|&c| c >= k) {
            return Err(ProblemError::Invalid("coloring uses an unknown color".into()));
        }
        Ok(self)
    }

    pub fn variant(&self) -> TilingVariant {
        self.variant
    }

    pub fn tiles(&self) -> &TileSet {
        &self.tiles
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn left(&self) -> &[usize] {
        &self.left
    }

    pub fn top(&self) -> &[usize] {
        &self.top
    }

    pub fn right(&self) -> &[usize] {
        &self.right
    }

    pub fn bottom(&self) -> &[usize] {
        &self.bottom
    }

    /// `⟨T⟩$l$t$r$b` (bounded) or `⟨T⟩$t$b` (corridor).
    pub fn to_word(&self) -> String {
        let coloring = |c: &[usize]| {
            c.iter()
                .map(|&id| self.tiles.colors[id].as_str())
                .collect::<Vec<_>>()
                .join(&ENTRY_SEPARATOR.to_string())
        };
        let mut parts = vec![self.tiles.serialize()];
        match self.variant {
            TilingVariant::Bounded => {
                for c in [&self.left, &self.top, &self.right, &self.bottom] {
                    parts.push(coloring(c));
                }
            }
            TilingVariant::Corridor => {
                parts.push(coloring(&self.top));
                parts.push(coloring(&self.bottom));
            }
        }
        parts.join(&PART_SEPARATOR.to_string())
    }

    pub fn to_json(&self) -> TilingInstanceJson {
        let names = |c: &[usize]| c.iter().map(|&id| self.tiles.colors[id].clone()).collect();
        let bounded = self.variant == TilingVariant::Bounded;
        TilingInstanceJson {
            tiles: self.tiles.to_json(),
            variant: self.variant,
            width: self.width,
            l: bounded.then(|| names(&self.left)),
            t: names(&self.top),
            r: bounded.then(|| names(&self.right)),
            b: names(&self.bottom),
        }
    }

    pub fn solve(&self) -> Result<Option<Tiling>, ProblemError> {
        match self.variant {
            TilingVariant::Bounded => Ok(solve_bounded_tiling(self)),
            TilingVariant::Corridor => Ok(solve_corridor_tiling(self)?.map(|(_, tiling)| tiling)),
        }
    }

    /// Checks matching between neighbours and against every coloring.
    pub fn is_valid_tiling(&self, tiling: &Tiling) -> bool {
        let n = self.width;
        let h = tiling.height;
        if tiling.width != n || h == 0 || tiling.grid.len() != n * h {
            return false;
        }
        if self.variant == TilingVariant::Bounded && h != n {
            return false;
        }
        let tiles = &self.tiles.tiles;
        let Some(at) = tiling
            .grid
            .iter()
            .map(|&t| tiles.get(t).copied())
            .collect::<Option<Vec<Tile>>>()
        else {
            return false;
        };
        let cell = |i: usize, j: usize| at[j * n + i];
        for j in 0..h {
            for i in 0..n {
                let t = cell(i, j);
                if i + 1 < n && t.e != cell(i + 1, j).w {
                    return false;
                }
                if j + 1 < h && t.n != cell(i, j + 1).s {
                    return false;
                }
            }
        }
        let borders_ok = (0..n).all(|i| cell(i, 0).s == self.bottom[i] && cell(i, h - 1).n == self.top[i]);
        let sides_ok = self.variant == TilingVariant::Corridor
            || (0..h).all(|j| cell(0, j).w == self.left[j] && cell(n - 1, j).e == self.right[j]);
        borders_ok && sides_ok
    }
}

/// Tiling-instance JSON: the tile-set fields plus the variant and colorings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TilingInstanceJson {
    #[serde(flatten)]
    pub tiles: TilesJson,
    pub variant: TilingVariant,
    pub width: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub l: Option<Vec<String>>,
    pub t: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r: Option<Vec<String>>,
    pub b: Vec<String>,
}

impl TilingInstanceJson {
    pub fn into_instance(self) -> Result<TilingInstance, ProblemError> {
        let tiles = self.tiles.into_tile_set()?;
        let ids = |field: &str, names: &[String]| {
            names
                .iter()
                .map(|name| {
                    tiles.color_id(name).ok_or_else(|| {
                        ProblemError::Invalid(format!("{field}: unknown color {name:?}"))
                    })
                })
                .collect::<Result<Vec<usize>, ProblemError>>()
        };
        let top = ids("t", &self.t)?;
        let bottom = ids("b", &self.b)?;
        if top.len() != self.width {
            return Err(ProblemError::Invalid(format!(
                "t: expected {} colors, got {}",
                self.width,
                top.len()
            )));
        }
        let instance = match self.variant {
            TilingVariant::Bounded => {
                let (Some(l), Some(r)) = (&self.l, &self.r) else {
                    return Err(ProblemError::Invalid(
                        "l/r: bounded instances need both side colorings".into(),
                    ));
                };
                let left = ids("l", l)?;
                let right = ids("r", r)?;
                TilingInstance::bounded(tiles, left, top, right, bottom)?
            }
            TilingVariant::Corridor => TilingInstance::corridor(tiles, top, bottom)?,
        };
        Ok(instance)
    }
}

/// Tile indices, row-major from the bottom row.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tiling {
    pub width: usize,
    pub height: usize,
    pub grid: Vec<usize>,
}

impl Tiling {
    pub fn at(&self, i: usize, j: usize) -> usize {
        self.grid[j * self.width + i]
    }
}

/// Backtracking over the cells in row-major order from the bottom-left.
///
/// Each cell's candidates are the tiles matching the west and south colors
/// already fixed; the border colorings are checked as soon as a cell touches
/// them. Frontiers proven dead (the next cell plus the north colors of the
/// last `n` cells) are remembered, which bounds the work by the number of
/// distinct frontiers.
pub fn solve_bounded_tiling(instance: &TilingInstance) -> Option<Tiling> {
    if instance.variant != TilingVariant::Bounded {
        return None;
    }
    let n = instance.width;
    let tiles = &instance.tiles.tiles;
    let mut by_west_south: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
    for (idx, t) in tiles.iter().enumerate() {
        by_west_south.entry((t.w, t.s)).or_default().push(idx);
    }
    let mut solver = BoundedSolver {
        instance,
        n,
        by_west_south,
        grid: Vec::with_capacity(n * n),
        dead: HashSet::new(),
    };
    solver.place().then(|| Tiling {
        width: n,
        height: n,
        grid: solver.grid,
    })
}

struct BoundedSolver<'a> {
    instance: &'a TilingInstance,
    n: usize,
    by_west_south: HashMap<(usize, usize), Vec<usize>>,
    grid: Vec<usize>,
    dead: HashSet<(usize, usize, Vec<usize>)>,
}

impl BoundedSolver<'_> {
    fn tile(&self, k: usize) -> Tile {
        self.instance.tiles.tiles[self.grid[k]]
    }

    /// East color flowing into the next cell and the north colors of the
    /// last `n` placed cells.
    fn frontier(&self) -> (usize, usize, Vec<usize>) {
        let k = self.grid.len();
        let east = if k % self.n == 0 { usize::MAX } else { self.tile(k - 1).e };
        let norths = (k.saturating_sub(self.n)..k).map(|c| self.tile(c).n).collect();
        (k, east, norths)
    }

    fn place(&mut self) -> bool {
        let n = self.n;
        let k = self.grid.len();
        if k == n * n {
            return true;
        }
        let key = self.frontier();
        if self.dead.contains(&key) {
            return false;
        }
        let (i, j) = (k % n, k / n);
        let west = if i == 0 { self.instance.left[j] } else { self.tile(k - 1).e };
        let south = if j == 0 { self.instance.bottom[i] } else { self.tile(k - n).n };
        let candidates = self.by_west_south.get(&(west, south)).cloned().unwrap_or_default();
        for idx in candidates {
            let t = self.instance.tiles.tiles[idx];
            if i == n - 1 && t.e != self.instance.right[j] {
                continue;
            }
            if j == n - 1 && t.n != self.instance.top[i] {
                continue;
            }
            self.grid.push(idx);
            if self.place() {
                return true;
            }
            self.grid.pop();
        }
        self.dead.insert(key);
        false
    }
}

/// Minimal-height corridor tiling, as `(height, tiling)`.
pub fn solve_corridor_tiling(instance: &TilingInstance) -> Result<Option<(usize, Tiling)>, ProblemError> {
    solve_corridor_tiling_with_cap(instance, DEFAULT_CORRIDOR_NODE_CAP)
}

/// Breadth-first search over rows. A row's successors depend only on its
/// north colors, so the visited set ranges over those color vectors. The
/// leftmost west and rightmost east colors are unconstrained. `node_cap`
/// bounds the number of rows generated.
pub fn solve_corridor_tiling_with_cap(
    instance: &TilingInstance,
    node_cap: usize,
) -> Result<Option<(usize, Tiling)>, ProblemError> {
    if instance.variant != TilingVariant::Corridor {
        return Ok(None);
    }
    let n = instance.width;
    let tiles = &instance.tiles.tiles;
    let mut by_south: HashMap<usize, Vec<usize>> = HashMap::new();
    for (idx, t) in tiles.iter().enumerate() {
        by_south.entry(t.s).or_default().push(idx);
    }

    // profiles[p] is a color vector; parent[p] = (previous profile, row used)
    let mut profiles: Vec<Vec<usize>> = vec![instance.bottom.clone()];
    let mut parent: Vec<Option<(usize, Vec<usize>)>> = vec![None];
    let mut index: HashMap<Vec<usize>, usize> = HashMap::from([(instance.bottom.clone(), 0)]);
    let mut queue = VecDeque::from([0usize]);
    let mut generated = 0usize;

    while let Some(p) = queue.pop_front() {
        let south = profiles[p].clone();
        let mut rows = Vec::new();
        let mut row = Vec::with_capacity(n);
        rows_over(tiles, &by_south, &south, &mut row, &mut rows, &mut generated, node_cap)?;
        for row in rows {
            let north: Vec<usize> = row.iter().map(|&t| tiles[t].n).collect();
            if north == instance.top {
                let mut grid_rows = vec![row];
                let mut cur = p;
                while let Some((prev, r)) = &parent[cur] {
                    grid_rows.push(r.clone());
                    cur = *prev;
                }
                grid_rows.reverse();
                let height = grid_rows.len();
                return Ok(Some((
                    height,
                    Tiling {
                        width: n,
                        height,
                        grid: grid_rows.concat(),
                    },
                )));
            }
            if !index.contains_key(&north) {
                index.insert(north.clone(), profiles.len());
                profiles.push(north);
                parent.push(Some((p, row)));
                queue.push_back(profiles.len() - 1);
            }
        }
    }
    Ok(None)
}

fn rows_over(
    tiles: &[Tile],
    by_south: &HashMap<usize, Vec<usize>>,
    south: &[usize],
    row: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
    generated: &mut usize,
    cap: usize,
) -> Result<(), ProblemError> {
    let i = row.len();
    if i == south.len() {
        *generated += 1;
        if *generated > cap {
            return Err(ProblemError::ResourceLimit(format!(
                "more than {cap} corridor rows generated"
            )));
        }
        out.push(row.clone());
        return Ok(());
    }
    for &idx in by_south.get(&south[i]).map(Vec::as_slice).unwrap_or_default() {
        if let Some(&prev) = row.last() {
            if tiles[prev].e != tiles[idx].w {
                continue;
            }
        }
        row.push(idx);
        rows_over(tiles, by_south, south, row, out, generated, cap)?;
        row.pop();
    }
    Ok(())
}

/// Parses `⟨T⟩$l$t$r$b` (bounded) or `⟨T⟩$t$b` (corridor). Coloring colors
/// not used by any tile are added to the color table. `None` if the word is
/// malformed or the colorings do not fit one width.
pub fn parse_tiling_word(word: &str, variant: TilingVariant) -> Option<TilingInstance> {
    let parts: Vec<&str> = word.split(PART_SEPARATOR).collect();
    let expected = match variant {
        TilingVariant::Bounded => 5,
        TilingVariant::Corridor => 3,
    };
    if parts.len() != expected {
        return None;
    }
    let tiles = TileSet::parse(parts[0]).ok()?;
    let mut colors = tiles.colors.clone();
    let mut colorings = Vec::with_capacity(expected - 1);
    for part in &parts[1..] {
        let entries: Vec<usize> = if part.is_empty() {
            Vec::new()
        } else {
            part.split(ENTRY_SEPARATOR).map(|name| intern(&mut colors, name)).collect()
        };
        colorings.push(entries);
    }
    let tiles = TileSet::new(colors, tiles.tiles).ok()?;
    let mut c = colorings.into_iter();
    match variant {
        TilingVariant::Bounded => {
            let (l, t, r, b) = (c.next()?, c.next()?, c.next()?, c.next()?);
            TilingInstance::bounded(tiles, l, t, r, b).ok()
        }
        TilingVariant::Corridor => {
            let (t, b) = (c.next()?, c.next()?);
            TilingInstance::corridor(tiles, t, b).ok()
        }
    }
}

pub fn member_bounded_tiling(word: &str) -> bool {
    parse_tiling_word(word, TilingVariant::Bounded).is_some_and(|inst| solve_bounded_tiling(&inst).is_some())
}

/// Errors only when the corridor search exceeds its node cap.
pub fn member_corridor_tiling(word: &str) -> Result<bool, ProblemError> {
    match parse_tiling_word(word, TilingVariant::Corridor) {
        Some(inst) => Ok(solve_corridor_tiling(&inst)?.is_some()),
        None => Ok(false),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(colors: &[&str], tiles: &[[usize; 4]]) -> TileSet {
        TileSet::new(
            colors.iter().map(|c| c.to_string()).collect(),
            tiles.iter().map(|&[w, n, e, s]| Tile { w, n, e, s }).collect(),
        )
        .unwrap()
    }

    /// Every `n x h` grid over the tile set.
    fn brute_force(instance: &TilingInstance, height: usize) -> Vec<Tiling> {
        let n = instance.width();
        let k = instance.tiles().tiles().len();
        let cells = n * height;
        let mut out = Vec::new();
        for code in 0..k.pow(cells as u32) {
            let mut c = code;
            let grid = (0..cells)
                .map(|_| {
                    let t = c % k;
                    c /= k;
                    t
                })
                .collect();
            let tiling = Tiling {
                width: n,
                height,
                grid,
            };
            if instance.is_valid_tiling(&tiling) {
                out.push(tiling);
            }
        }
        out
    }

    #[test]
    fn single_cell() {
        // colors: 0 = white, 1 = blank, 2 = accept
        let tiles = set(&["<>", "_", "qf"], &[[0, 1, 0, 1]]);
        let inst = TilingInstance::bounded(tiles.clone(), vec![0], vec![1], vec![0], vec![1]).unwrap();
        let tiling = solve_bounded_tiling(&inst).unwrap();
        assert_eq!(tiling.grid, vec![0]);
        let inst = TilingInstance::bounded(tiles, vec![0], vec![2], vec![0], vec![1]).unwrap();
        assert_eq!(solve_bounded_tiling(&inst), None);
    }

    #[test]
    fn bounded_agrees_with_brute_force() {
        let tile_sets = [
            set(&["x", "y"], &[[0, 0, 1, 1], [1, 1, 0, 0]]),
            set(&["x", "y"], &[[0, 1, 0, 0], [0, 0, 0, 1]]),
            set(&["x", "y", "z"], &[[0, 1, 2, 0], [2, 0, 0, 1], [0, 2, 0, 1]]),
        ];
        for tiles in tile_sets {
            let k = tiles.colors().len();
            for n in 1..=2 {
                // every coloring combination over the first two colors
                let combos = 1usize << (4 * n);
                for mask in 0..combos {
                    let pick = |offset: usize| -> Vec<usize> {
                        (0..n).map(|i| (mask >> (offset * n + i)) & 1).map(|c| c % k).collect()
                    };
                    let inst =
                        TilingInstance::bounded(tiles.clone(), pick(0), pick(1), pick(2), pick(3)).unwrap();
                    let solved = solve_bounded_tiling(&inst);
                    let brute = brute_force(&inst, n);
                    assert_eq!(solved.is_some(), !brute.is_empty(), "{inst:?}");
                    if let Some(t) = solved {
                        assert!(brute.contains(&t));
                    }
                }
            }
        }
    }

    #[test]
    fn corridor_single_row() {
        let tiles = set(&["<>", "c"], &[[0, 1, 0, 1]]);
        let inst = TilingInstance::corridor(tiles, vec![1], vec![1]).unwrap();
        let (h, tiling) = solve_corridor_tiling(&inst).unwrap().unwrap();
        assert_eq!(h, 1);
        assert!(inst.is_valid_tiling(&tiling));
    }

    #[test]
    fn corridor_without_matching_top() {
        let tiles = set(&["<>", "c", "d"], &[[0, 1, 0, 1]]);
        let inst = TilingInstance::corridor(tiles, vec![2], vec![1]).unwrap();
        assert_eq!(solve_corridor_tiling(&inst).unwrap(), None);
    }

    #[test]
    fn corridor_minimal_height() {
        // a -> b -> c chain, plus a slow detour a -> d -> d -> c
        let tiles = set(
            &["<>", "a", "b", "c", "d"],
            &[[0, 2, 0, 1], [0, 3, 0, 2], [0, 4, 0, 1], [0, 4, 0, 4], [0, 3, 0, 4]],
        );
        let inst = TilingInstance::corridor(tiles, vec![3], vec![1]).unwrap();
        let (h, tiling) = solve_corridor_tiling(&inst).unwrap().unwrap();
        assert_eq!(h, 2);
        assert!(inst.is_valid_tiling(&tiling));
        assert!(brute_force(&inst, 1).is_empty());
        assert!(!brute_force(&inst, 2).is_empty());
    }

    #[test]
    fn corridor_sides_are_free() {
        let tiles = set(&["x", "y", "c"], &[[0, 2, 1, 2]]);
        let inst = TilingInstance::corridor(tiles, vec![2], vec![2]).unwrap();
        assert!(solve_corridor_tiling(&inst).unwrap().is_some());
    }

    #[test]
    fn corridor_node_cap() {
        let tiles = set(&["x", "c"], &[[0, 1, 0, 1], [0, 1, 0, 1]]);
        let inst = TilingInstance::corridor(tiles, vec![0; 4], vec![1; 4]).unwrap();
        assert!(matches!(
            solve_corridor_tiling_with_cap(&inst, 3),
            Err(ProblemError::ResourceLimit(_))
        ));
    }

    #[test]
    fn word_round_trip() {
        let tiles = set(&["<>", "_", "q2:_"], &[[0, 1, 0, 1], [0, 2, 0, 2]]);
        let inst = TilingInstance::bounded(tiles.clone(), vec![0], vec![2], vec![0], vec![2]).unwrap();
        let word = inst.to_word();
        assert_eq!(word, "<>,_,<>,_;<>,q2:_,<>,q2:_$<>$q2:_$<>$q2:_");
        assert_eq!(parse_tiling_word(&word, TilingVariant::Bounded), Some(inst));
        assert!(member_bounded_tiling(&word));
        let corridor = TilingInstance::corridor(tiles, vec![1, 1], vec![1, 1]).unwrap();
        let word = corridor.to_word();
        assert_eq!(parse_tiling_word(&word, TilingVariant::Corridor), Some(corridor));
        assert!(member_corridor_tiling(&word).unwrap());
    }

    #[test]
    fn malformed_words() {
        for w in [
            "a,b,c$x$x$x$x",
            "a,b,c,d$x$x#x$x$x",
            "a,b,c,d$$$$",
            "a,b,c,d$x$x$x",
        ] {
            assert!(!member_bounded_tiling(w), "{w}");
        }
        assert!(!member_corridor_tiling("a,b,c,d$x").unwrap());
        // unknown colors in the coloring are legal but match no tile
        assert!(!member_bounded_tiling("a,b,a,b$z$b$a$b"));
    }

    #[test]
    fn json_round_trip() {
        let text = r#"{"colors":["w","b","qf"],"white":"w","blank":"b","accept":"qf",
            "tiles":[{"w":"w","n":"b","e":"w","s":"b"}],
            "variant":"bounded","width":1,"l":["w"],"t":["b"],"r":["w"],"b":["b"]}"#;
        let j: TilingInstanceJson = serde_json::from_str(text).unwrap();
        let inst = j.into_instance().unwrap();
        assert_eq!(inst.tiles().white(), Some(0));
        assert!(inst.solve().unwrap().is_some());
        let again = inst.to_json().into_instance().unwrap();
        assert_eq!(inst, again);
        let bad = text.replace(r#""s":"b""#, r#""s":"zz""#);
        let err = serde_json::from_str::<TilingInstanceJson>(&bad).unwrap().into_instance().unwrap_err();
        assert!(err.to_string().contains("tiles.s"), "{err}");
    }
}
