import itertools

import pytest

from nusus.morphology.conjugation import (
    BAABS,
    InvalidConjugationRequest,
    conjugate,
)
from nusus.morphology.declension import CaseMarking, MissingLexiconEntry, decline
from nusus.morphology.derivation import derive
from nusus.morphology.roots import RootClass, UnsupportedRoot, classify_root
from nusus.morphology.script import strip_diacritics

GOLDEN_PRESENT = {
    ("نصر", "a-u"): "يَنْصُرُ",
    ("جلس", "a-i"): "يَجْلِسُ",
    ("منع", "a-a"): "يَمْنَعُ",
    ("علم", "i-a"): "يَعْلَمُ",
    ("حسب", "i-i"): "يَحْسِبُ",
    ("كرم", "u-u"): "يَكْرُمُ",
}

GOLDEN_PAST = {
    ("نصر", "a-u"): "نَصَرَ",
    ("جلس", "a-i"): "جَلَسَ",
    ("منع", "a-a"): "مَنَعَ",
    ("علم", "i-a"): "عَلِمَ",
    ("حسب", "i-i"): "حَسِبَ",
    ("كرم", "u-u"): "كَرُمَ",
}


@pytest.mark.parametrize("root,baab", GOLDEN_PRESENT)
def test_present_golden(root, baab):
    assert conjugate(root, BAABS[baab], "present", (3, "masc", "sing")) == GOLDEN_PRESENT[root, baab]


@pytest.mark.parametrize("root,baab", GOLDEN_PAST)
def test_past_golden(root, baab):
    assert conjugate(root, BAABS[baab], "past", (3, "masc", "sing")) == GOLDEN_PAST[root, baab]


def test_dual_suffixes():
    masc = conjugate("ذهب", BAABS["a-a"], "past", (3, "masc", "dual"))
    fem = conjugate("ذهب", BAABS["a-a"], "past", (3, "fem", "dual"))
    assert strip_diacritics(masc) == "ذهبا"
    assert strip_diacritics(fem) == "ذهبتا"


def test_exactly_six_baabs():
    assert len(BAABS) == 6
    assert set(BAABS) == {"a-u", "a-i", "a-a", "i-a", "i-i", "u-u"}


SUBJECTS = [
    (1, "common", "sing"),
    (1, "common", "plural"),
    (2, "masc", "sing"),
    (2, "fem", "sing"),
    (2, "common", "dual"),
    (2, "masc", "plural"),
    (2, "fem", "plural"),
    (3, "masc", "sing"),
    (3, "fem", "sing"),
    (3, "masc", "dual"),
    (3, "fem", "dual"),
    (3, "masc", "plural"),
    (3, "fem", "plural"),
]


def test_total_and_deterministic_over_allowed_cells():
    for baab, subject, tense in itertools.product(BAABS.values(), SUBJECTS, ["past", "present"]):
        once = conjugate("نصر", baab, tense, subject)
        again = conjugate("نصر", baab, tense, subject)
        assert once == again and once
    for baab in BAABS.values():
        for subject in SUBJECTS:
            if subject[0] != 2:
                continue
            assert conjugate("نصر", baab, "imperative", subject)


def test_imperative_requires_second_person():
    with pytest.raises(InvalidConjugationRequest):
        conjugate("نصر", BAABS["a-u"], "imperative", (3, "masc", "sing"))


def test_weak_root_rejected():
    with pytest.raises(UnsupportedRoot):
        conjugate("نام", BAABS["a-u"], "past", (3, "masc", "sing"))
    with pytest.raises(UnsupportedRoot):
        derive("نام", "active_participle")


def test_classify_root():
    assert classify_root("خرج") == RootClass("sahih")
    assert classify_root("نام") == RootClass("mutal", "medial")
    assert classify_root("وقف") == RootClass("mutal", "initial")
    assert classify_root("جري") == RootClass("mutal", "final")
    assert classify_root("أخذ") == RootClass("mahmuz")
    assert classify_root("قرأ") == RootClass("mahmuz")
    with pytest.raises(UnsupportedRoot):
        classify_root("استخرج")


def test_decline_golden():
    assert decline("مفكر", "plural", CaseMarking("NOM"), "sound_masc") == "مفكرون"
    assert decline("وسادة", "plural", None, "sound_fem") == "وسادات"
    assert decline("ولد", "singular", CaseMarking("NOM", "indefinite")) == "ولدٌ"
    assert decline("ولد", "singular", CaseMarking("NOM")) == "ولدُ"


def test_dual_by_case():
    assert decline("ولد", "dual", CaseMarking("NOM")) == "ولدان"
    assert decline("ولد", "dual", CaseMarking("ACC")) == "ولدين"
    assert decline("ولد", "dual", CaseMarking("GEN")) == "ولدين"


def test_sound_masc_by_case():
    assert decline("مفكر", "plural", CaseMarking("ACC"), "sound_masc") == "مفكرين"
    assert decline("مفكر", "plural", CaseMarking("GEN"), "sound_masc") == "مفكرين"


def test_suffix_lemma_independence():
    # Same (number, case, kind) must give the same suffix whatever the stem.
    for lemma_a, lemma_b in [("ولد", "قمر"), ("مفكر", "لاعب")]:
        for case in ("NOM", "ACC", "GEN"):
            a = decline(lemma_a, "dual", CaseMarking(case))
            b = decline(lemma_b, "dual", CaseMarking(case))
            assert a[len(lemma_a):] == b[len(lemma_b):]


def test_broken_plural_needs_lexicon():
    assert decline("ولد", "plural", CaseMarking("NOM", "indefinite"), "broken", "أولاد") == "أولادٌ"
    with pytest.raises(MissingLexiconEntry):
        decline("ولد", "plural", CaseMarking("NOM"), "broken")


def test_diptote_takes_no_tanwin():
    nom = decline("أصفر", "singular", CaseMarking("NOM", "indefinite"), diptote=True)
    gen = decline("أصفر", "singular", CaseMarking("GEN", "indefinite"), diptote=True)
    assert nom == "أصفرُ"
    assert gen == "أصفرَ"


def test_derivation_golden():
    assert derive("كتب", "active_participle") == "كاتب"
    assert derive("كتب", "passive_participle") == "مكتوب"
    assert derive("درس", "place_noun") == "مدرسة"
    assert derive("درس", "place_noun", lexicon_override="مدرس") == "مدرس"
