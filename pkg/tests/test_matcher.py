import random

from permscan.core import build_alphabet, parikh, to_ids
from permscan.diffstate import DiffState
from permscan.matcher import enumerate_matches, find_first, find_first_stream, scan_stream
from permscan.oracle import brute_matches


def random_case(rng, max_n=64, max_sigma=8):
    sigma = rng.randint(1, max_sigma)
    alphabet = "abcdefgh"[:sigma]
    n = rng.randint(0, max_n)
    m = rng.randint(0, n + 2)
    text = "".join(rng.choices(alphabet, k=n))
    pattern = "".join(rng.choices(alphabet, k=m))
    return text, pattern


def test_find_first_worked_example():
    assert find_first("abcabdcb", "bac") == 0


def test_find_first_pattern_longer_than_text():
    assert find_first("ab", "abc") is None


def test_find_first_whole_text():
    assert find_first("aaa", "aaa") == 0


def test_find_first_empty_pattern():
    assert find_first("abc", "") == 0
    assert find_first("", "") == 0


def test_enumerate_worked_example():
    report = enumerate_matches("abcabdcb", "bac")
    assert report.found
    assert report.positions == (0, 1, 2)
    assert (report.n, report.m) == (8, 3)


def test_enumerate_no_matching_symbols():
    report = enumerate_matches("dddd", "ab")
    assert not report.found
    assert report.positions == ()


def test_enumerate_overlapping_matches():
    assert enumerate_matches("abab", "ab").positions == (0, 1, 2)


def test_enumerate_empty_pattern_convention():
    report = enumerate_matches("abc", "")
    assert report.found
    assert report.positions == (0,)
    assert report.applies == 0


def test_enumerate_pattern_longer_is_empty_without_scanning():
    report = enumerate_matches("ab", "abc")
    assert not report.found
    assert report.positions == ()
    assert report.applies == 0


def test_enumerate_work_count_exact():
    for text, pattern in [("abcabdcb", "bac"), ("abab", "ab"), ("aaaa", "aaaa")]:
        n, m = len(text), len(pattern)
        assert enumerate_matches(text, pattern).applies == m + 2 * (n - m)


def test_find_first_equals_min_of_enumeration():
    rng = random.Random(7)
    for _ in range(400):
        text, pattern = random_case(rng)
        report = enumerate_matches(text, pattern)
        first = find_first(text, pattern)
        if report.positions:
            assert first == report.positions[0]
        else:
            assert first is None


def test_oracle_equivalence_small_fuzz():
    rng = random.Random(99)
    for _ in range(1500):
        text, pattern = random_case(rng)
        assert list(enumerate_matches(text, pattern).positions) == brute_matches(text, pattern)


def test_positions_strictly_increasing_and_in_range():
    rng = random.Random(5)
    for _ in range(300):
        text, pattern = random_case(rng)
        report = enumerate_matches(text, pattern)
        assert list(report.positions) == sorted(set(report.positions))
        for p in report.positions:
            assert 0 <= p <= report.n - report.m


def test_maintained_difference_equals_recomputed_difference():
    # replay the scan with the library's own state object and verify the
    # maintained vector against a from-scratch recount at sampled steps
    rng = random.Random(31337)
    for _ in range(60):
        text, pattern = random_case(rng, max_n=40, max_sigma=5)
        n, m = len(text), len(pattern)
        if not 0 < m <= n:
            continue
        alphabet = build_alphabet([pattern, text])
        state = DiffState.from_pattern(parikh(pattern, alphabet))
        ids = to_ids(text, alphabet)
        pat = parikh(pattern, alphabet)
        positions = []
        for j in range(m):
            state.apply(ids[j], +1)
        sample_steps = {rng.randrange(n - m + 1) for _ in range(4)}
        for i in range(n - m + 1):
            if i > 0:
                state.apply(ids[i - 1], -1)
                state.apply(ids[i + m - 1], +1)
            if state.nonzero == 0:
                positions.append(i)
            if i in sample_steps:
                window = parikh(text[i : i + m], alphabet)
                expected = [w - p for w, p in zip(window.counts, pat.counts)]
                assert state.delta == expected
                assert state.nonzero == sum(1 for d in expected if d)
        assert positions == list(enumerate_matches(text, pattern).positions)


def test_stream_matches_in_memory():
    rng = random.Random(4242)
    for _ in range(400):
        text, pattern = random_case(rng)
        streamed = scan_stream(iter(text), pattern)
        direct = enumerate_matches(text, pattern)
        assert (streamed.found, streamed.positions, streamed.n, streamed.m) == (
            direct.found,
            direct.positions,
            direct.n,
            direct.m,
        )
        if len(pattern) <= len(text):
            # a too-short stream pays for the symbols it consumed; the
            # in-memory path skips the scan, so work only agrees here
            assert streamed.applies == direct.applies


def test_stream_on_bytes_chunks():
    text = b"abcabdcb"
    report = scan_stream(iter(text), b"bac")
    assert report.positions == (0, 1, 2)
    assert report.applies == 3 + 2 * 5


def test_find_first_stream_agrees_and_stops_early():
    consumed = []

    def tracking(text):
        for sym in text:
            consumed.append(sym)
            yield sym

    assert find_first_stream(tracking("abcabdcb"), "bac") == 0
    # first match is decided after the third symbol; nothing further read
    assert len(consumed) == 3

    rng = random.Random(11)
    for _ in range(300):
        text, pattern = random_case(rng)
        assert find_first_stream(iter(text), pattern) == find_first(text, pattern)


def test_text_only_symbols_participate_normally():
    # symbols absent from the pattern make any window containing them
    # unmatchable, but must not break the scan
    report = enumerate_matches("azbzab", "ab")
    assert report.positions == (4,)
