use super::{Graph, GraphError};

const HEADER: &str = ">>graph6<<";

pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = String::new();
    if n <= 62 {
        out.push((n as u8 + 63) as char);
    } else {
        assert!(n <= 258_047, "graph6 size field limited to 258047 vertices");
        out.push('~');
        for shift in [12, 6, 0] {
            out.push((((n >> shift) & 63) as u8 + 63) as char);
        }
    }
    let mut acc = 0u8;
    let mut bits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            bits += 1;
            if bits == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                bits = 0;
            }
        }
    }
    if bits > 0 {
        out.push(((acc << (6 - bits)) + 63) as char);
    }
    out
}

pub fn from_graph6(text: &str) -> Result<Graph, GraphError> {
    let bad = |why: &str| GraphError::MalformedGraph6(format!("{why}: {text:?}"));
    let s = text.trim_end_matches(['\n', '\r']);
    let s = s.strip_prefix(HEADER).unwrap_or(s);
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(bad("empty"));
    }
    if bytes.iter().any(|&b| !(63..=126).contains(&b)) {
        return Err(bad("byte outside 63..=126"));
    }
    let (n, body) = if bytes[0] != 126 {
        (bytes[0] as usize - 63, &bytes[1..])
    } else {
        if bytes.len() < 4 || bytes[1] == 126 {
            return Err(bad("unsupported size field"));
        }
        let n = bytes[1..4].iter().fold(0usize, |acc, &b| (acc << 6) | (b as usize - 63));
        (n, &bytes[4..])
    };
    let nbits = n * n.saturating_sub(1) / 2;
    if body.len() != nbits.div_ceil(6) {
        return Err(bad("wrong length"));
    }
    let mut g = Graph::empty(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if (byte >> (5 - k % 6)) & 1 == 1 {
                g.add_edge(i, j).map_err(|_| bad("inconsistent"))?;
            }
            k += 1;
        }
    }
    // padding bits must be zero for the encoding to be canonical
    while k < body.len() * 6 {
        if ((body[k / 6] - 63) >> (5 - k % 6)) & 1 == 1 {
            return Err(bad("nonzero padding"));
        }
        k += 1;
    }
    Ok(g)
}

/// `n=<count>` followed by one `v: a b c` line per vertex.
pub fn to_adjacency_text(g: &Graph) -> String {
    let mut out = format!("n={}\n", g.order());
    for v in 0..g.order() {
        let nbrs: Vec<String> = g.neighbors(v).iter().map(usize::to_string).collect();
        out.push_str(&format!("{v}: {}\n", nbrs.join(" ")));
    }
    out
}

pub fn from_adjacency_text(text: &str) -> Result<Graph, GraphError> {
    let bad = |why: String| GraphError::MalformedAdjacency(why);
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#'));
    let head = lines.next().ok_or_else(|| bad("missing n= line".into()))?;
    let n: usize = head
        .strip_prefix("n=")
        .and_then(|x| x.trim().parse().ok())
        .ok_or_else(|| bad(format!("bad header {head:?}")))?;
    let mut rows: Vec<Option<Vec<usize>>> = vec![None; n];
    for line in lines {
        let (v, rest) = line.split_once(':').ok_or_else(|| bad(format!("bad line {line:?}")))?;
        let v: usize = v.trim().parse().map_err(|_| bad(format!("bad vertex in {line:?}")))?;
        if v >= n || rows[v].is_some() {
            return Err(bad(format!("vertex {v} out of range or repeated")));
        }
        let nbrs = rest
            .split_whitespace()
            .map(|t| t.parse::<usize>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| bad(format!("bad neighbour in {line:?}")))?;
        rows[v] = Some(nbrs);
    }
    let mut g = Graph::empty(n);
    for (v, row) in rows.iter().enumerate() {
        let row = row.as_ref().ok_or_else(|| bad(format!("no line for vertex {v}")))?;
        for &w in row {
            if w >= n {
                return Err(GraphError::VertexOutOfRange { vertex: w, order: n });
            }
            let listed_back = rows[w].as_ref().is_some_and(|r| r.contains(&v));
            if !listed_back {
                return Err(bad(format!("edge {v}-{w} is not symmetric")));
            }
            if v < w {
                g.add_edge(v, w)?;
            } else if v == w {
                return Err(GraphError::Loop(v));
            }
        }
        let mut sorted = row.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != row.len() {
            return Err(GraphError::DuplicateEdge(v, row[0]));
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k4_graph6() {
        let k4 = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(to_graph6(&k4), "C~");
        assert_eq!(from_graph6("C~").unwrap(), k4);
        assert_eq!(from_graph6(">>graph6<<C~\n").unwrap(), k4);
    }

    #[test]
    fn rejects_garbage() {
        assert!(from_graph6("garbage~~~").is_err());
        assert!(from_graph6("").is_err());
        assert!(from_graph6("C~~").is_err());
        assert!(from_graph6("B@").is_err());
        assert!(from_graph6("B_").is_ok());
    }

    #[test]
    fn adjacency_round_trip() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(from_adjacency_text(&to_adjacency_text(&g)).unwrap(), g);
        assert!(from_adjacency_text("n=2\n0: 1\n1:\n").is_err());
    }
}
