"""Regenerate the frozen conjugation paradigm table.

The table covers the six bare-triliteral conjugation classes for past,
present and imperative.  Cells the source grammar fragments do not give
are the standard paradigms; they are frozen here so the engine and the
tests share one artifact.  Run from the repo root:

    python scripts/make_paradigm_table.py > src/nusus/data/paradigm.tsv
"""

FATHA = "َ"
DAMMA = "ُ"
KASRA = "ِ"
SUKUN = "ْ"
SHADDA = "ّ"

ALIF = "ا"
WAW = "و"
YA = "ي"
TA = "ت"
NUN = "ن"
MIM = "م"
HAMZA_ALIF = "أ"

BAABS = ["a-u", "a-i", "a-a", "i-a", "i-i", "u-u"]

PAST_SUFFIX = {
    (1, "common", "sing"): SUKUN + TA + DAMMA,
    (1, "common", "plural"): SUKUN + NUN + FATHA + ALIF,
    (2, "masc", "sing"): SUKUN + TA + FATHA,
    (2, "fem", "sing"): SUKUN + TA + KASRA,
    (2, "common", "dual"): SUKUN + TA + DAMMA + MIM + FATHA + ALIF,
    (2, "masc", "plural"): SUKUN + TA + DAMMA + MIM + SUKUN,
    (2, "fem", "plural"): SUKUN + TA + DAMMA + NUN + SHADDA + FATHA,
    (3, "masc", "sing"): FATHA,
    (3, "fem", "sing"): FATHA + TA + SUKUN,
    (3, "masc", "dual"): FATHA + ALIF,
    (3, "fem", "dual"): FATHA + TA + FATHA + ALIF,
    (3, "masc", "plural"): DAMMA + WAW + ALIF,
    (3, "fem", "plural"): SUKUN + NUN + FATHA,
}

PRESENT = {
    (1, "common", "sing"): (HAMZA_ALIF + FATHA, DAMMA),
    (1, "common", "plural"): (NUN + FATHA, DAMMA),
    (2, "masc", "sing"): (TA + FATHA, DAMMA),
    (2, "fem", "sing"): (TA + FATHA, KASRA + YA + NUN + FATHA),
    (2, "common", "dual"): (TA + FATHA, FATHA + ALIF + NUN + KASRA),
    (2, "masc", "plural"): (TA + FATHA, DAMMA + WAW + NUN + FATHA),
    (2, "fem", "plural"): (TA + FATHA, SUKUN + NUN + FATHA),
    (3, "masc", "sing"): (YA + FATHA, DAMMA),
    (3, "fem", "sing"): (TA + FATHA, DAMMA),
    (3, "masc", "dual"): (YA + FATHA, FATHA + ALIF + NUN + KASRA),
    (3, "fem", "dual"): (TA + FATHA, FATHA + ALIF + NUN + KASRA),
    (3, "masc", "plural"): (YA + FATHA, DAMMA + WAW + NUN + FATHA),
    (3, "fem", "plural"): (YA + FATHA, SUKUN + NUN + FATHA),
}

IMPERATIVE_SUFFIX = {
    (2, "masc", "sing"): SUKUN,
    (2, "fem", "sing"): KASRA + YA,
    (2, "common", "dual"): FATHA + ALIF,
    (2, "masc", "plural"): DAMMA + WAW + ALIF,
    (2, "fem", "plural"): SUKUN + NUN + FATHA,
}


def rows():
    yield "baab\ttense\tperson\tgender\tnumber\tprefix\tsuffix"
    for (p, g, n), suffix in PAST_SUFFIX.items():
        yield f"any\tpast\t{p}\t{g}\t{n}\t-\t{suffix}"
    for (p, g, n), (prefix, suffix) in PRESENT.items():
        yield f"any\tpresent\t{p}\t{g}\t{n}\t{prefix}\t{suffix}"
    for baab in BAABS:
        # Connective alif vowel follows the present stem vowel.
        prefix = ALIF + (DAMMA if baab.endswith("u") else KASRA)
        for (p, g, n), suffix in IMPERATIVE_SUFFIX.items():
            yield f"{baab}\timperative\t{p}\t{g}\t{n}\t{prefix}\t{suffix}"


if __name__ == "__main__":
    print("\n".join(rows()))
