"""Brute-force reference implementations used for differential testing.

Everything here is definitional and deliberately slow: occurrence counts by
scanning, extended net occurrences and minimal unique substrings by checking
all candidate intervals, and graph sizes by building the naive trees and
merging isomorphic subtrees.  Intended for texts up to a few hundred symbols.

Conventions shared with the rest of the package:
  * texts are ``bytes``; positions are 1-based; intervals (s, e) are closed
    and inclusive;
  * the empty string occurs len(text)+1 times (between consecutive
    characters and at both boundaries), so two adjacent characters that are
    each unique form a length-2 net unique substring.
"""

from collections import Counter


def occ_count(text: bytes, pattern: bytes) -> int:
    """Number of (possibly overlapping) occurrences of pattern in text."""
    if not pattern:
        return len(text) + 1
    n, m = len(text), len(pattern)
    return sum(1 for i in range(n - m + 1) if text[i:i + m] == pattern)


def occ_positions(text: bytes, pattern: bytes) -> list:
    """1-based start positions of all occurrences (empty pattern excluded)."""
    assert pattern, "positions of the empty string are not well defined here"
    n, m = len(text), len(pattern)
    return [i + 1 for i in range(n - m + 1) if text[i:i + m] == pattern]


def _substring_counts(text: bytes) -> Counter:
    n = len(text)
    cnt = Counter()
    for i in range(n):
        for j in range(i + 1, n + 1):
            cnt[text[i:j]] += 1
    return cnt


def eno(text: bytes) -> list:
    """ENO(text): sorted extended net occurrences, each as a (start, end) pair.

    A net occurrence is an occurrence [i..j] of a repeat (the empty repeat at
    the inter-character slots [i..i-1] included) whose one-character left and
    right extensions are both unique; the reported interval is [i-1..j+1].
    """
    n = len(text)
    if n < 2:
        return []
    cnt = _substring_counts(text)
    out = []
    for i in range(2, n + 1):            # left extension must exist
        for j in range(i - 1, n):        # j = i-1 is the empty repeat slot
            u = text[i - 1:j]
            u_occ = n + 1 if i - 1 == j else cnt[u]
            if u_occ < 2:
                continue
            if cnt[text[i - 2:j]] == 1 and cnt[text[i - 1:j + 1]] == 1:
                out.append((i - 1, j + 1))
    out.sort()
    return out


def mus(text: bytes) -> list:
    """MUS(text): sorted occurrences of minimal unique substrings.

    text[i..j] is minimal unique iff it is unique and both one-character
    shrinks are repeats (the empty shrink of a single character counts as a
    repeat whenever the text has length >= 1).
    """
    n = len(text)
    if n == 0:
        return []
    cnt = _substring_counts(text)

    def rep(i, j):  # is text[i..j] repeating (1-based, closed; empty if i > j)
        if i > j:
            return n + 1 >= 2
        return cnt[text[i - 1:j]] >= 2

    out = []
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            if cnt[text[i - 1:j]] == 1 and rep(i + 1, j) and rep(i, j - 1):
                out.append((i, j))
    out.sort()
    return out


def lr_suf(text: bytes) -> int:
    """|lrSuf|: length of the longest repeating suffix (0 for the empty one)."""
    n = len(text)
    for k in range(n - 1, 0, -1):
        if occ_count(text, text[n - k:]) >= 2:
            return k
    return 0


def lr_pref(text: bytes) -> int:
    """|lrPref|: length of the longest repeating prefix."""
    n = len(text)
    for k in range(n - 1, 0, -1):
        if occ_count(text, text[:k]) >= 2:
            return k
    return 0


def sq_suf(text: bytes) -> int:
    """|sqSuf|: length of the shortest quasi-unique suffix (occ <= 2)."""
    n = len(text)
    if n + 1 <= 2:
        return 0
    for k in range(1, n + 1):
        if occ_count(text, text[n - k:]) <= 2:
            return k
    raise AssertionError("the whole text is always unique")


def sq_pref(text: bytes) -> int:
    """|sqPref|: length of the shortest quasi-unique prefix."""
    n = len(text)
    if n + 1 <= 2:
        return 0
    for k in range(1, n + 1):
        if occ_count(text, text[:k]) <= 2:
            return k
    raise AssertionError("the whole text is always unique")


def tail_run(text: bytes, c: int) -> tuple:
    """(exp, unique): exp = max run of c ending the text; is c^exp unique?"""
    n = len(text)
    exp = 0
    while exp < n and text[n - 1 - exp] == c:
        exp += 1
    if exp == 0:
        return 0, False
    return exp, occ_count(text, bytes([c]) * exp) == 1


def head_run(text: bytes) -> tuple:
    """(exp', unique): exp' = max run of text[1] prefixing text[2..n]."""
    n = len(text)
    if n < 2:
        return 0, False
    c = text[0]
    exp = 0
    while 1 + exp < n and text[1 + exp] == c:
        exp += 1
    if exp == 0:
        return 0, False
    return exp, occ_count(text[1:], bytes([c]) * exp) == 1


def lr_sq_ends(text: bytes) -> dict:
    """All end-point quantities at once, by definition (for differential tests)."""
    return {
        "lr_suf": lr_suf(text),
        "sq_suf": sq_suf(text),
        "sq_suf_occ2": occ_count(text, text[len(text) - sq_suf(text):]) == 2
        if sq_suf(text) > 0 else len(text) + 1 == 2,
        "lr_pref": lr_pref(text),
        "sq_pref": sq_pref(text),
        "sq_pref_occ2": occ_count(text, text[:sq_pref(text)]) == 2
        if sq_pref(text) > 0 else len(text) + 1 == 2,
        "exp": tail_run(text, text[-1])[0] if text else 0,
        "exp_prime": head_run(text)[0],
    }


# ---------------------------------------------------------------------------
# Naive suffix trees and CDAWG edge counts.


def _suffix_trie_compact(text: bytes, explicit: bool) -> dict:
    """Compact trie of all suffixes of text, as nested dicts.

    Nodes are dicts mapping label bytes -> child node; each node also carries
    "$end": True when some suffix ends exactly there.  In the explicit tree a
    node is kept at every suffix end; in the implicit tree only branching
    points survive compaction.
    """
    root = {}
    n = len(text)
    for s in range(n):
        node = root
        for ch in text[s:]:
            node = node.setdefault(ch, {})
        node["$end"] = True

    def compact(node):
        out = {}
        for ch, child in node.items():
            if ch == "$end":
                continue
            label = [ch]
            cur = child
            while True:
                keys = [k for k in cur.keys() if k != "$end"]
                if len(keys) != 1:
                    break                      # branching point or leaf
                if explicit and cur.get("$end", False):
                    break                      # suffix ends force nodes here
                label.append(keys[0])
                cur = cur[keys[0]]
            sub = compact(cur)
            sub["$end"] = cur.get("$end", False)
            out[bytes(label)] = sub
        return out

    tree = compact(root)
    tree["$end"] = root.get("$end", False)
    return tree


def _tree_signature(node, use_end_marks: bool):
    items = []
    for label, child in node.items():
        if label == "$end":
            continue
        items.append((label, _tree_signature(child, use_end_marks)))
    items.sort()
    mark = bool(node.get("$end")) if use_end_marks else False
    return (mark, tuple(items))


def _merged_edge_count(tree, use_end_marks: bool) -> int:
    seen = {}

    def walk(node):
        sig = _tree_signature(node, use_end_marks)
        if sig not in seen:
            seen[sig] = sum(1 for k in node if k != "$end")
            for label, child in node.items():
                if label != "$end":
                    walk(child)

    walk(tree)
    return sum(seen.values())


def explicit_cdawg_edges(text: bytes) -> int:
    """e(T): edge count of the explicit CDAWG (iso-subtree merged Weiner tree)."""
    if not text:
        return 0
    tree = _suffix_trie_compact(text, explicit=True)
    return _merged_edge_count(tree, use_end_marks=True)


def implicit_cdawg_edges(text: bytes) -> int:
    """e'(T): edge count of the implicit CDAWG (iso-subtree merged Ukkonen tree)."""
    if not text:
        return 0
    tree = _suffix_trie_compact(text, explicit=False)
    return _merged_edge_count(tree, use_end_marks=False)


# ---------------------------------------------------------------------------
# Prefix-side lemma audit.


def nus_strings(text: bytes) -> set:
    """The set of net unique substrings of text (as strings, not intervals)."""
    return {text[s - 1:e] for s, e in eno(text)}


def prepend_diff_audit(text: bytes, c: int) -> list:
    """Check the prefix-side change characterizations for text -> c+text.

    Returns a list of human-readable violation strings (empty = all good).
    Characterizations checked, with ct = c+text:
      * every NUS lost by prepending (in NUS(text) \\ NUS(ct)) has either its
        right part ub = sqPref(ct) with occ_ct(ub) = 2, or its left part
        au = lrPref(ct) with occ_ct(au) = 2;
      * every NUS gained that is not a prefix of ct has inner repeat
        u = lrPref(ct) with occ_ct(u) = 2;
      * every gained NUS that is a prefix of ct has u = lrPref(text), or
        u = c^exp' unique in text.
    """
    ct = bytes([c]) + text
    old, new = nus_strings(text), nus_strings(ct)
    bad = []

    sqp = ct[:sq_pref(ct)]
    lrp = ct[:lr_pref(ct)]
    for w in old - new:
        ub, au = w[1:], w[:-1]
        ok = (ub == sqp and occ_count(ct, ub) == 2) or \
             (au == lrp and occ_count(ct, au) == 2)
        if not ok:
            bad.append(f"lost NUS {w!r} not characterized (text={text!r}, c={c})")

    for w in new - old:
        u = w[1:-1]
        if ct.startswith(w):
            exp = 0
            while exp < len(text) and text[exp] == c:
                exp += 1
            ok = (u == text[:lr_pref(text)] and lr_pref(text) == len(u)) or \
                 (u == bytes([c]) * exp and occ_count(text, u) == 1)
            if not ok:
                bad.append(f"gained prefix NUS {w!r} not characterized "
                           f"(text={text!r}, c={c})")
        else:
            if not (u == lrp and occ_count(ct, u) == 2):
                bad.append(f"gained non-prefix NUS {w!r} not characterized "
                           f"(text={text!r}, c={c})")
    return bad
