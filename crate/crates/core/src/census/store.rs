//! Corpus on disk: one lattice file and one trace file per entry, plus a
//! tab-separated index.

use std::fs;
use std::io;
use std::path::Path;

use super::Corpus;
use crate::cli::format::emit_lattice;

pub const INDEX_HEADER: &str =
    "id\tsize\tcode\tsemimodular\tmodular\tdistributive\tslim\tfour_cell\tpairs\tlattice\ttrace";

pub fn write_corpus(dir: &Path, corpus: &Corpus) -> io::Result<()> {
    fs::create_dir_all(dir.join("lattices"))?;
    fs::create_dir_all(dir.join("traces"))?;
    let mut index = String::from(INDEX_HEADER);
    index.push('\n');
    for (k, e) in corpus.entries.iter().enumerate() {
        let lat = format!("lattices/{k:05}.lat");
        let trace = format!("traces/{k:05}.json");
        fs::write(dir.join(&lat), emit_lattice(&e.diagram))?;
        let json = serde_json::to_string_pretty(&e.traces).map_err(io::Error::other)?;
        fs::write(dir.join(&trace), json + "\n")?;
        let p = &e.predicates;
        index += &format!(
            "{k}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{lat}\t{trace}\n",
            e.diagram.len(),
            e.code.hex(),
            p.semimodular,
            p.modular,
            p.distributive,
            p.slim,
            p.four_cell,
            p.pairs
        );
    }
    fs::write(dir.join("index.tsv"), index)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::census::build_corpus;
    use crate::cli::format::parse_lattice;

    #[test]
    fn written_corpus_reads_back() {
        let corpus = build_corpus(5).unwrap();
        let dir = std::env::temp_dir().join(format!("planarlat-store-{}", std::process::id()));
        write_corpus(&dir, &corpus).unwrap();
        let index = fs::read_to_string(dir.join("index.tsv")).unwrap();
        assert_eq!(index.lines().count(), corpus.entries.len() + 1);
        for (line, e) in index.lines().skip(1).zip(&corpus.entries) {
            let lat = line.split('\t').nth(9).unwrap();
            let d = parse_lattice(&fs::read_to_string(dir.join(lat)).unwrap()).unwrap();
            assert_eq!(d, e.diagram);
        }
        fs::remove_dir_all(&dir).unwrap();
    }
}
