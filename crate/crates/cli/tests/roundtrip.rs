//! Serializing a structure and reading it back gives an equal structure,
//! ids included.

use std::sync::Arc;

use bicat_cli::format::{Document, Writer};
use bicat_core::corpus;
use bicat_core::enumerate::{enumerate_icons, enumerate_lax_functors, enumerate_oplax, LaxQuery};
use bicat_core::laxfun::LaxFunctor;

fn reread(text: &str) -> Document {
    let mut doc = Document::new();
    doc.parse_str(text, "roundtrip").unwrap_or_else(|e| {
        let numbered: Vec<String> = text.lines().enumerate().map(|(i, l)| format!("{:>4} {l}", i + 1)).collect();
        panic!("{e}\n{}", numbered.join("\n"))
    });
    doc
}

#[test]
fn corpus_bicategories_round_trip() {
    for b in corpus::bicategories() {
        let mut w = Writer::new();
        w.bicategory(&b);
        let doc = reread(&w.finish());
        assert_eq!(**doc.bicategory(b.name()).unwrap(), *b, "{}", b.name());
    }
}

#[test]
fn monoidal_categories_round_trip() {
    for v in corpus::monoidal_categories() {
        let mut w = Writer::new();
        w.monoidal(&v).unwrap();
        let doc = reread(&w.finish());
        assert_eq!(**doc.monoidal(&v.name).unwrap(), *v, "{}", v.name);
    }
}

#[test]
fn functors_round_trip() {
    let mut functors: Vec<LaxFunctor> = vec![
        corpus::arrow_into_thickened(),
        corpus::arrow_to_terminal(),
        corpus::arrow_into_two_cell(),
        corpus::lax_trunc_to_max().unwrap(),
    ];
    functors.extend(enumerate_lax_functors(&corpus::walking_two_cell(), &corpus::z2_cocycle(), &LaxQuery::default()));
    for (i, f) in functors.iter().enumerate() {
        let name = format!("F{i}");
        let mut w = Writer::new();
        w.functor(&name, f);
        let doc = reread(&w.finish());
        assert_eq!(**doc.functor(&name).unwrap(), *f, "{name}");
    }
}

#[test]
fn icons_and_transformations_round_trip() {
    let (a, b) = (corpus::walking_arrow(), corpus::thickened_arrow());
    let functors: Vec<Arc<LaxFunctor>> =
        enumerate_lax_functors(&a, &b, &LaxQuery::default()).into_iter().map(Arc::new).collect();
    let mut icons = 0;
    let mut oplax = 0;
    for f in &functors {
        for g in &functors {
            for (i, x) in enumerate_icons(f, g, None).iter().enumerate().take(3) {
                let mut w = Writer::new();
                w.icon(&format!("a{i}"), x);
                let doc = reread(&w.finish());
                assert_eq!(doc.icon(&format!("a{i}")).unwrap().components, x.components);
                icons += 1;
            }
            for (i, u) in enumerate_oplax(f, g, None).iter().enumerate().take(3) {
                let mut w = Writer::new();
                w.oplax(&format!("u{i}"), u);
                let doc = reread(&w.finish());
                assert_eq!(**doc.oplax(&format!("u{i}")).unwrap(), *u);
                oplax += 1;
            }
        }
    }
    assert!(icons > 0 && oplax > 0);
}

#[test]
fn written_text_is_stable() {
    let b = corpus::z2_cocycle();
    let mut w = Writer::new();
    w.bicategory(&b);
    let first = w.finish();
    let doc = reread(&first);
    let mut w = Writer::new();
    w.bicategory(doc.bicategory(b.name()).unwrap());
    assert_eq!(first, w.finish());
}

mod names {
    use super::*;
    use bicat_core::FiniteCategory;
    use proptest::prelude::*;

    proptest! {
        #[test]
        fn any_object_names_survive(names in proptest::collection::btree_set("[ -~\\t]{0,8}", 1..4)) {
            let names: Vec<String> = names.into_iter().collect();
            let c = FiniteCategory::discrete(&names);
            let mut w = Writer::new();
            w.category("odd name # \"x\"", &c);
            let doc = reread(&w.finish());
            let back = doc.category("odd name # \"x\"").unwrap();
            prop_assert_eq!(back.object_names(), c.object_names());
        }
    }
}
