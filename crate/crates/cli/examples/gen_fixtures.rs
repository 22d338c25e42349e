//! Regenerates the JSON fixture corpus under `crates/cli/fixtures/`.
//!
//! Run with `cargo run -p pairlab-cli --example gen_fixtures`.

use std::path::PathBuf;

use pairlab::entwine::{ComoduleEntwining, ModuleEntwining};
use pairlab::mixed::MixedDistributiveLaw;
use pairlab::monadics::AlgebraModule;
use pairlab::{fixtures, ExactRing, LinMap};
use pairlab_cli::schema::{linmap_to_matrix, InstanceFile};

/// `swap: R^a (x) R^b -> R^b (x) R^a`.
fn swap(ring: ExactRing, a: usize, b: usize) -> LinMap {
    let mut s = LinMap::zero(ring, b * a, a * b);
    for i in 0..a {
        for j in 0..b {
            s.set(j * a + i, i * b + j, ring.one());
        }
    }
    s
}

fn main() {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures");
    std::fs::create_dir_all(&dir).unwrap();
    let save = |name: &str, file: &InstanceFile| {
        file.save(&dir.join(name)).unwrap();
        println!("wrote {name}");
    };

    // plain (co)algebras
    save("i1.json", &InstanceFile::from_algebra(&fixtures::i1()));
    save("i2.json", &InstanceFile::from_algebra(&fixtures::i2()));
    save("i3.json", &InstanceFile::from_algebra(&fixtures::i3()));
    save("c2.json", &InstanceFile::from_coalgebra(&fixtures::c2()));
    save("c3.json", &InstanceFile::from_coalgebra(&fixtures::c3()));

    // pairings
    save("p1.json", &InstanceFile::from_pairing(&fixtures::p1()));
    save("p2.json", &InstanceFile::from_pairing(&fixtures::p2()));

    // the repaired weak structures the entwining/mixed corpus is built on
    let f = fixtures::i2().mu_tilde().unwrap();
    let g = fixtures::c2().delta_tilde().unwrap();
    save("f-weak.json", &InstanceFile::from_algebra(&f));
    save("g-weak.json", &InstanceFile::from_coalgebra(&g));

    // free module over the weak monad, cofree comodule over the weak comonad
    let free = AlgebraModule::free(&f, 1);
    let mut module = InstanceFile::from_algebra(&f);
    module.kind = "module".into();
    module.dims = vec![f.dim(), free.dim()];
    module
        .matrices
        .insert("action".into(), linmap_to_matrix(free.action()));
    save("module-free.json", &module);

    let cofree = pairlab::comonadics::CoalgebraComodule::cofree(&g, 1);
    let mut comodule = InstanceFile::from_coalgebra(&g);
    comodule.kind = "comodule".into();
    comodule.dims = vec![g.dim(), cofree.dim()];
    comodule
        .matrices
        .insert("coaction".into(), linmap_to_matrix(cofree.coaction()));
    save("comodule-cofree.json", &comodule);

    // entwinings: the normalized flip on the weak base
    let z2 = ExactRing::Zn(2);
    let flip = ModuleEntwining::new(f.clone(), f.clone(), 2, swap(z2, 2, 2))
        .unwrap()
        .normalized();
    save(
        "flip-entwining.json",
        &InstanceFile::from_entwining_module(&flip, Some(&f)),
    );
    let flip_co = ComoduleEntwining::new(g.clone(), g.clone(), 2, swap(z2, 2, 2))
        .unwrap()
        .normalized();
    save(
        "flip-entwining-co.json",
        &InstanceFile::from_entwining_comodule(&flip_co, Some(&g)),
    );

    // mixed distributive law: the normalized flip (gamma (x) theta) . swap
    let omega = LinMap::compose(
        &LinMap::tensor(&g.gamma(), &f.theta()).unwrap(),
        &swap(z2, 2, 2),
    )
    .unwrap();
    let mx = MixedDistributiveLaw::new(f.clone(), g.clone(), omega).unwrap();
    save("w2-mixed.json", &InstanceFile::from_mixed(&mx));

    // a mixed law with every flag off the happy path: omega = 0
    let zero = MixedDistributiveLaw::new(f, g, LinMap::zero(z2, 4, 4)).unwrap();
    save("zero-mixed.json", &InstanceFile::from_mixed(&zero));
}
