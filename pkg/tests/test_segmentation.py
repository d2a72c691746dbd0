import pytest

from nusus.morphology.clitics import (
    DEFAULT_INVENTORY,
    CliticItem,
    Pronoun,
    RuleConfig,
    Segmentation,
    check_agglutination,
    segment,
)
from nusus.morphology.features import NounFeatures, VerbFeatures
from nusus.morphology.lexicon import Lexicon, LexiconEntry
from nusus.morphology.pos import PosTag

from oracles import legal_closure, seg_key


def oracle_lexicon() -> Lexicon:
    """Ten concrete readings over eight skeletons, covering every rule."""
    return Lexicon(
        [
            LexiconEntry("كتب", PosTag("verb", "past"), VerbFeatures("past")),
            LexiconEntry("يكتب", PosTag("verb", "present"), VerbFeatures("present")),
            LexiconEntry(
                "يكتب",
                PosTag("verb", "present"),
                VerbFeatures("present", mood="subjunctive"),
            ),
            LexiconEntry(
                "اكتب", PosTag("verb", "imperative"), VerbFeatures("imperative")
            ),
            LexiconEntry(
                "جلس", PosTag("verb", "past"), VerbFeatures("past", transitivity="lazim")
            ),
            LexiconEntry(
                "سمع", PosTag("verb", "past"), VerbFeatures("past", voice="passive")
            ),
            LexiconEntry(
                "ولد", PosTag("noun"), NounFeatures(case="NOM", definiteness="indefinite")
            ),
            LexiconEntry(
                "ولد", PosTag("noun"), NounFeatures(case="GEN", definiteness="definite")
            ),
            LexiconEntry(
                "بيت", PosTag("noun"), NounFeatures(case="GEN", definiteness="indefinite")
            ),
            LexiconEntry(
                "كمال", PosTag("noun", "proper"), NounFeatures(case="NOM", definiteness="definite")
            ),
        ]
    )


def keys(segs):
    return {seg_key(s) for s in segs}


def test_article_plus_noun():
    lex = Lexicon([LexiconEntry("أولاد", PosTag("noun"), NounFeatures())])
    segs = segment("الأولاد", lex)
    assert len(segs) == 1
    assert [p.surface for p in segs[0].proclitics] == ["ال"]
    assert segs[0].base == "أولاد"


def test_clitic_free_word():
    lex = Lexicon([LexiconEntry("ولد", PosTag("noun"), NounFeatures())])
    segs = segment("ولد", lex)
    assert len(segs) == 1
    assert segs[0].proclitics == () and segs[0].enclitic is None


def test_out_of_lexicon_yields_empty():
    lex = Lexicon([LexiconEntry("ولد", PosTag("noun"), NounFeatures())])
    assert segment("قمر", lex) == []


def test_oracle_equivalence_full_closure():
    lex = oracle_lexicon()
    accepted, rejected_only = legal_closure(lex)
    assert len(accepted) >= 500
    disagreements = []
    for surface, expected in accepted.items():
        got = keys(segment(surface, lex))
        if got != expected:
            disagreements.append(surface)
    assert disagreements == []
    # Surfaces only reachable through violating attachments must not parse.
    for surface in rejected_only:
        assert segment(surface, lex) == []


def test_round_trip_and_soundness_over_closure():
    lex = oracle_lexicon()
    accepted, _ = legal_closure(lex)
    for surface in accepted:
        for seg in segment(surface, lex):
            assert seg.surface() == surface
            assert check_agglutination(seg) == []
            assert seg.morpheme_count <= 5


def test_ranking_fewest_clitics_then_longest_base():
    lex = Lexicon(
        [
            LexiconEntry("وقف", PosTag("verb", "past"), VerbFeatures("past")),
            LexiconEntry("قف", PosTag("verb", "imperative"), VerbFeatures("imperative")),
        ]
    )
    segs = segment("وقف", lex)
    assert [s.base for s in segs] == ["وقف", "قف"]
    assert segs[0].clitic_count == 0 and segs[1].clitic_count == 1


def _noun_seg(proclitics, base="ولد", features=NounFeatures(), enclitic=None):
    return Segmentation(tuple(proclitics), base, PosTag("noun"), features, enclitic)


ART = CliticItem("article", "ال", "article")
PREP_BI = CliticItem("preposition", "ب", "preposition")
WAW = CliticItem("conjunction", "و", "conjunction")
HAMZA = CliticItem("interrogation", "أ", "interrogation")
ENC_HU = Pronoun("ه", 3, "masc", "sing")


def test_article_with_enclitic_violates_n1():
    seg = _noun_seg([ART], enclitic=ENC_HU)
    assert "N1" in check_agglutination(seg)


def test_article_with_tanwin_violates_n2():
    seg = _noun_seg([ART], features=NounFeatures(definiteness="indefinite"))
    assert "N2" in check_agglutination(seg)


def test_preposition_requires_genitive():
    ok = _noun_seg([PREP_BI], features=NounFeatures(case="GEN"))
    assert check_agglutination(ok) == []
    bad = _noun_seg([PREP_BI], features=NounFeatures(case="NOM"))
    assert check_agglutination(bad) == ["N3"]


def test_six_morphemes_violates_g1():
    seg = Segmentation(
        (HAMZA, WAW, CliticItem("particle", "س", "future"), CliticItem("particle", "ل", "corroboration")),
        "كتب",
        PosTag("verb", "past"),
        VerbFeatures("past"),
        ENC_HU,
    )
    assert "G1" in check_agglutination(seg)


def test_interrogation_blocked_on_imperative():
    seg = Segmentation(
        (HAMZA,), "اكتب", PosTag("verb", "imperative"), VerbFeatures("imperative")
    )
    assert check_agglutination(seg) == ["V1"]


def test_enclitic_blocked_on_passive_and_intransitive():
    passive = Segmentation(
        (), "سمع", PosTag("verb", "past"), VerbFeatures("past", voice="passive"), ENC_HU
    )
    lazim = Segmentation(
        (), "جلس", PosTag("verb", "past"), VerbFeatures("past", transitivity="lazim"), ENC_HU
    )
    assert check_agglutination(passive) == ["V4"]
    assert check_agglutination(lazim) == ["V4"]


def test_stated_present_tense_particle_rules_and_toggles():
    lam_subj = Segmentation(
        (CliticItem("particle", "ل", "subjunctive"),),
        "يكتب",
        PosTag("verb", "present"),
        VerbFeatures("present"),
    )
    sin = Segmentation(
        (CliticItem("particle", "س", "future"),),
        "يكتب",
        PosTag("verb", "present"),
        VerbFeatures("present"),
    )
    assert check_agglutination(lam_subj) == ["V2"]
    assert check_agglutination(sin) == ["V3"]
    relaxed = RuleConfig(
        subjunctive_lam_blocks_present=False, future_sin_blocks_present=False
    )
    assert check_agglutination(lam_subj, relaxed) == []
    assert check_agglutination(sin, relaxed) == []


def test_second_person_enclitic_skeleton_is_ambiguous():
    lex = Lexicon([LexiconEntry("كتب", PosTag("verb", "past"), VerbFeatures("past"))])
    segs = segment("كتبك", lex)
    genders = {s.enclitic.gender for s in segs}
    assert genders == {"masc", "fem"}
