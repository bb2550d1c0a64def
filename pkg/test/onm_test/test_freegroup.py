import unittest

from hypothesis import given
from hypothesis import strategies as st

from onm_model.models.context import IndexOutOfRangeError
from onm_model.models.freegroup import GroupWord, free_reduce, group_inv, group_mul
from onm_model.services.parser import parse_groupword
from test.onm_test.helpers import CTX_23

group_letters = st.tuples(st.sampled_from([("s", 1), ("s", 2), ("t", 1), ("t", 2), ("t", 3)]),
                          st.sampled_from([1, -1])).map(lambda x: (x[0][0], x[0][1], x[1]))
group_words = st.lists(group_letters, max_size=8).map(lambda letters: GroupWord(CTX_23, tuple(letters)))


class TestGroupWord(unittest.TestCase):

    def test_free_reduction(self):
        self.assertEqual(free_reduce([("s", 1, 1), ("s", 1, -1)]), ())
        self.assertEqual(free_reduce([("s", 1, 1), ("t", 1, -1), ("t", 1, 1), ("s", 2, 1)]),
                         (("s", 1, 1), ("s", 2, 1)))

    def test_inverse_example(self):
        g = GroupWord.a(CTX_23, 1) * GroupWord.a(CTX_23, 2, -1)
        self.assertEqual(str(group_inv(g)), "a2 a1^-1")

    def test_rendering(self):
        self.assertEqual(str(GroupWord.identity(CTX_23)), "e")
        g = parse_groupword("a1 a2^-1 b1 b2^-1", CTX_23)
        self.assertEqual(str(g), "a1 a2^-1 b1 b2^-1")
        self.assertEqual(len(g), 4)

    def test_parse_identity(self):
        self.assertTrue(parse_groupword("a1 a1^-1", CTX_23).is_identity)
        self.assertTrue(parse_groupword("e", CTX_23).is_identity)

    def test_index_out_of_range(self):
        with self.assertRaises(IndexOutOfRangeError):
            GroupWord.a(CTX_23, 3)
        with self.assertRaises(IndexOutOfRangeError):
            parse_groupword("b4", CTX_23)


class TestGroupLaws(unittest.TestCase):

    @given(group_words, group_words, group_words)
    def test_associativity(self, g, h, k):
        self.assertEqual(group_mul(group_mul(g, h), k), group_mul(g, group_mul(h, k)))

    @given(group_words)
    def test_inverse_and_identity(self, g):
        e = GroupWord.identity(CTX_23)
        self.assertEqual(g * group_inv(g), e)
        self.assertEqual(group_inv(g) * g, e)
        self.assertEqual(g * e, g)
        self.assertEqual(group_inv(group_inv(g)), g)

    @given(group_words)
    def test_reduced_has_no_adjacent_inverse_pair(self, g):
        for (f1, i1, e1), (f2, i2, e2) in zip(g.letters, g.letters[1:]):
            self.assertFalse(f1 == f2 and i1 == i2 and e1 == -e2)


if __name__ == "__main__":
    unittest.main()
