"""Frozen reference values, each cross-checked against the source text it came from."""

import re

import pytest

# (label, regex that must match the source text)
PRINTED = [
    ("grade-2 generator", r"X_1:=-\\frac\{1\}\{2\}\\mathscr\{P\}\^2_\{1, 0\}"),
    ("grade-3 generator", r"X_2:=-\\frac\{1\}\{54\}\\mathscr\{P\}_\{2, 0\}\^1\+\\frac\{7\}\{54\}\\mathscr\{P\}_\{2, 0\}\^2"),
    ("grade-4 generator", r"X_3:= \\frac\{2\}\{9\}\\mathscr\{P\}_\{3, 0\}\^1\+\\frac\{1\}\{12\}\\mathscr\{P\}_\{3, 0\}\^2"),
    ("a01=0 grade-3 generator", r"\\frac\{5\}\{6\}\\mathscr\{P\}_\{1, 1\}\^1\+\\frac\{1\}\{18\}\\mathscr\{P\}_\{1, 1\}\^2-\\frac\{5\}\{12\}\\mathscr\{R\}_\{1, 1\}\^1"),
    ("third-level ranks", r"\{\\rm rank\}\(d\^\{3, 3\}\)=10\\\) and \\\(\{\\rm rank\}\(d\^\{3, 2\}\)=9"),
    ("third-level survivor", r"\\mathscr\{P\}\^1_\{2, 0\}\+6\\mathscr\{P\}\^2_\{3, 0\}\+\\mathscr\{R\}\^1_\{3, 0\}\+\\mathscr\{R\}\^2_\{3, 0\}"),
    ("third-level kernel", r"=\\mathbb\{R\}\\left\\\{\\mathscr\{P\}\^1_\{0, 1\}\\!\+\\!\\mathscr\{P\}\^1_\{1, 0\}\\!-\\!4\\mathscr\{P\}\^2_\{0, 1\}"),
    ("ratio-integer grade-1 display", r"\\!\+\\!2\\mathscr\{P\}_\{1, 0\}\^1\\!-\\!\\mathscr\{P\}_\{1, 0\}\^2"),
]


@pytest.mark.parametrize("label,pattern", PRINTED, ids=[p[0] for p in PRINTED])
def test_printed_value_present(paper_text, label, pattern):
    assert re.search(pattern, paper_text), label
