//! The bundled corpus, embedded so the installed binary is self-contained.
//! The same files ship as data under `corpus/`.

/// Scripts in their canonical run order.
pub const CORPUS: &[(&str, &str)] = &[
    ("lemma1.geo", include_str!("../corpus/lemma1.geo")),
    (
        "lemma1_identities.geo",
        include_str!("../corpus/lemma1_identities.geo"),
    ),
    ("lemma2.geo", include_str!("../corpus/lemma2.geo")),
    (
        "fuhrmann_def.geo",
        include_str!("../corpus/fuhrmann_def.geo"),
    ),
    ("stevanovic.geo", include_str!("../corpus/stevanovic.geo")),
    (
        "negative_control.geo",
        include_str!("../corpus/negative_control.geo"),
    ),
];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_parses() {
        for (name, source) in CORPUS {
            if let Err(diag) = geocheck_core::dsl::parse(source) {
                panic!("{}", geocheck_core::dsl::format_diagnostic(name, &diag));
            }
        }
    }

    #[test]
    fn corpus_has_six_scripts() {
        assert_eq!(CORPUS.len(), 6);
    }
}
