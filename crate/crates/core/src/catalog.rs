//! Bundled example matrices, diagrams and bundles. Payloads are compiled in
//! and checked against their SHA-256 digests whenever they are loaded.

use serde::Serialize;

use crate::certify::Bundle;
use crate::diagram::LinkDiagram;
use crate::error::{Error, Result};
use crate::json::sha256_hex;
use crate::seifert::SeifertMatrix;
use crate::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum EntryKind {
    Matrix,
    Diagram,
    Bundle,
}

impl EntryKind {
    pub fn as_str(self) -> &'static str {
        match self {
            EntryKind::Matrix => "matrix",
            EntryKind::Diagram => "diagram",
            EntryKind::Bundle => "bundle",
        }
    }
}

#[derive(Debug)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub kind: EntryKind,
    pub sha256: &'static str,
    pub description: &'static str,
    payload: &'static str,
}

macro_rules! entry {
    ($name:literal, $kind:ident, $sha:literal, $desc:literal) => {
        CatalogEntry {
            name: $name,
            kind: EntryKind::$kind,
            sha256: $sha,
            description: $desc,
            payload: include_str!(concat!("../catalog/", $name, ".json")),
        }
    };
}

static ENTRIES: &[CatalogEntry] = &[
    entry!("hopf", Diagram, "91efeb8e053bf2f511dd5f142b8968ca9e53c4d43934980d6c1ac0a889588e63", "positive Hopf link, linking number 1"),
    entry!("hopf-negative", Diagram, "7c9175f68627071b0f8baecb4ea56ef465a3b4de84593777d2466709db09d6a0", "negative Hopf link, the mirror of hopf, linking number -1"),
    entry!("torus-2-4", Diagram, "332a4e87af130dce7f9622115f61244d4024edc51d14e94857a9d0d4726c46c2", "(2,4) torus link as the closure of the 2-braid s1^4, linking number 2"),
    entry!("trefoil-knot", Diagram, "bfaaf4cdf15d6bb43076b217d5b3d015b575cb92044d8b79269b0e784ca4de05", "right-handed trefoil knot"),
    entry!("unlink-2", Diagram, "d7bd83dd49b9d02027b5d07ce9b47756134928ef65e6f9938426bbbcd2857c56", "2-component trivial link"),
    entry!("unlink-3", Diagram, "5b0fcd38b3e5027801644099588994baa1d53908f3efc1b49335222744724cd7", "3-component trivial link"),
    entry!("borromean", Diagram, "679afafc422dc9cfce8412276bd2f4d53b63300d40c889a478374bde973ebbc1", "Borromean rings, 6 crossings"),
    entry!("whitehead-string", Diagram, "592270e092f34398d726ac642f4083fbf94e0e5109c18a635212e40e1d2b23d7", "2-strand string link whose closure is the Whitehead link (5 crossings)"),
    entry!("whitehead", Diagram, "64ff91d2ad4b420f6e6693d3feaab7aab495bb80082ff1c7fbeb18cf863e8e84", "Whitehead link, the closure of whitehead-string"),
    entry!("trefoil-matrix", Matrix, "49815cfbfe6b593dfbb292f4c7b0dbcc9a14f05e8b7c40a4e80e52796e6f6f33", "genus one Seifert matrix of the trefoil; admits no S-reduction"),
    entry!("staircase-7", Matrix, "bfb8835239fe51e9cd042445dbebd52267bdaf2239eb41882ff9cdd9662ca0fa", "genus three good-basis form with clasp signs (1,0,1) and every free entry set to 7"),
    entry!("wh-double-2", Matrix, "8b788aa2d4aad364aa54fe695f66486bb92004da0dc4db356a52391cb589f80f", "Seifert matrix of a 2-component untwisted Whitehead double, clasp signs (1,0)"),
    entry!("wh-double-3", Matrix, "22d84263ad3296a5213e745cf29cbbe095d7ade9115e3b2b9ba090be08435276", "Seifert matrix of a 3-component untwisted Whitehead double, clasp signs (1,1,1)"),
    entry!("lbeta", Bundle, "9a6320851765047c13c088f6754503eb6b0db9cd85c61c2ecef3cdf843ec153b", "L(beta) for beta = whitehead-string: genus one surfaces with clasp signs (1,1) and the four derived links"),
    entry!("wh-whitehead", Bundle, "a7ba64024dc0670d41dcb5e00d61cbb08846356490324bd17addd08d629af97b", "untwisted Whitehead double of the Whitehead link, clasp signs (1,0), derived links J with a zero-framed copy of J_i"),
    entry!("wh-borromean", Bundle, "40b919851d557a686f29c629849f14e2733a2bd4050d838e5008588a0fc4af78", "untwisted Whitehead double of the Borromean rings, clasp signs (1,1,1), derived links J with a zero-framed copy of J_i"),
];

pub fn entries() -> &'static [CatalogEntry] {
    ENTRIES
}

pub fn get(name: &str) -> Result<&'static CatalogEntry> {
    ENTRIES
        .iter()
        .find(|e| e.name == name)
        .ok_or_else(|| Error::Catalog { name: name.into(), detail: "no such entry".into() })
}

impl CatalogEntry {
    pub fn file_name(&self) -> String {
        format!("{}.json", self.name)
    }

    /// The payload text, after checking its digest.
    pub fn payload(&self) -> Result<&'static str> {
        let actual = sha256_hex(self.payload.as_bytes());
        if actual != self.sha256 {
            return Err(Error::Catalog {
                name: self.name.into(),
                detail: format!("checksum mismatch: expected {}, found {actual}", self.sha256),
            });
        }
        Ok(self.payload)
    }

    fn expect(&self, kind: EntryKind) -> Result<()> {
        if self.kind != kind {
            return Err(Error::Catalog {
                name: self.name.into(),
                detail: format!("is a {}, not a {}", self.kind.as_str(), kind.as_str()),
            });
        }
        Ok(())
    }

    pub fn diagram(&self) -> Result<LinkDiagram> {
        self.expect(EntryKind::Diagram)?;
        LinkDiagram::from_json(self.payload()?)
    }

    pub fn matrix<T: Scalar>(&self) -> Result<SeifertMatrix<T>> {
        self.expect(EntryKind::Matrix)?;
        SeifertMatrix::from_json(self.payload()?)
    }

    pub fn bundle<T: Scalar>(&self) -> Result<Bundle<T>> {
        self.expect(EntryKind::Bundle)?;
        Bundle::from_json(self.payload()?)
    }
}
