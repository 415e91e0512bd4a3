"""
Words over a free alphabet.

A letter is a generator name, its inverse is written in upper case
(``a`` / ``A``). Letters that end in ``+`` or ``-`` are edge letters
(``e1+`` / ``e1-``) and invert by flipping the sign.
"""
from typing import Iterable, Sequence

from recurrent_workbench.exceptions import PresentationError
from recurrent_workbench.models.diagram import Presentation

Word = tuple[str, ...]


def invert_letter(letter: str) -> str:
    if letter.endswith("+"):
        return f"{letter[:-1]}-"
    if letter.endswith("-"):
        return f"{letter[:-1]}+"
    return letter.swapcase()


def generator_of(letter: str) -> str:
    if letter.endswith(("+", "-")):
        return letter[:-1]
    return letter.lower()


def is_positive(letter: str) -> bool:
    if letter.endswith(("+", "-")):
        return letter.endswith("+")
    return letter.islower()


def invert_word(word: Sequence[str]) -> Word:
    return tuple(invert_letter(letter) for letter in reversed(word))


def parse_word(text: str) -> Word:
    """
    Parse a word written letter by letter.

    ``1`` and the empty string stand for the empty word; blanks are ignored.

    :param text: word text such as ``abAB``.
    :return: letters.
    """
    compact = text.replace(" ", "")
    if compact in {"", "1"}:
        return ()
    return tuple(compact)


def format_word(word: Sequence[str]) -> str:
    if not word:
        return "1"
    if all(len(letter) == 1 for letter in word):
        return "".join(word)
    return " ".join(word)


def free_reduce(word: Sequence[str]) -> Word:
    stack: list[str] = []
    for letter in word:
        if stack and stack[-1] == invert_letter(letter):
            stack.pop()
        else:
            stack.append(letter)
    return tuple(stack)


def cyclic_reduce(word: Sequence[str]) -> Word:
    reduced = list(free_reduce(word))
    while len(reduced) >= 2 and reduced[0] == invert_letter(reduced[-1]):
        reduced = reduced[1:-1]
    return tuple(reduced)


def is_cyclically_reduced(word: Sequence[str]) -> bool:
    return tuple(word) == cyclic_reduce(word)


def rotate(word: Sequence[str], offset: int) -> Word:
    if not word:
        return ()
    offset %= len(word)
    return tuple(word[offset:]) + tuple(word[:offset])


def rotations(word: Sequence[str]) -> list[Word]:
    return [rotate(word, offset) for offset in range(len(word))]


def minimal_rotation(word: Sequence[str]) -> Word:
    """Least cyclic shift, used as the canonical form of a cyclic word."""
    if not word:
        return ()
    return min(rotations(word))


def symmetrize(relators: Iterable[Sequence[str]]) -> tuple[Word, ...]:
    """
    All cyclic shifts of the relators and their inverses, without repeats.

    :param relators: relator words.
    :return: symmetrized set in first-seen order.
    """
    found: dict[Word, None] = {}
    for relator in relators:
        for candidate in (tuple(relator), invert_word(relator)):
            for shifted in rotations(candidate):
                found.setdefault(shifted, None)
    return tuple(found)


def syllable_ids(word: Sequence[str]) -> tuple[int, ...]:
    """
    Syllable index of every position, syllables taken cyclically.

    A syllable is a maximal run of letters of one generator; a run that
    wraps from the end of the word to its start is a single syllable.

    :param word: cyclic word.
    :return: one syllable id per position.
    """
    if not word:
        return ()
    ids = [0]
    for position in range(1, len(word)):
        same = generator_of(word[position]) == generator_of(word[position - 1])
        ids.append(ids[-1] if same else ids[-1] + 1)
    wraps = len(word) > 1 and generator_of(word[0]) == generator_of(word[-1])
    if wraps and ids[-1] != 0:
        last = ids[-1]
        ids = [0 if syllable == last else syllable for syllable in ids]
    return tuple(ids)


def alternating(first: str, second: str, length: int) -> Word:
    """Alternating word ``first second first ...`` with ``length`` letters."""
    return tuple(first if position % 2 == 0 else second for position in range(length))


def build_presentation(generators: Sequence[str], relators: Iterable[Sequence[str]]) -> Presentation:
    """
    Checked presentation.

    :param generators: generator names.
    :param relators: relator words over the generators and their inverses.
    :raises PresentationError: for letters outside the alphabet, empty or
        not cyclically reduced relators.
    :return: presentation.
    """
    alphabet = set(generators)
    words = []
    for index, relator in enumerate(relators):
        word = tuple(relator)
        if not word:
            raise PresentationError(f"relators.{index}: empty relator")
        unknown = sorted({letter for letter in word if generator_of(letter) not in alphabet})
        if unknown:
            raise PresentationError(f"relators.{index}: letters outside the alphabet {unknown}")
        if not is_cyclically_reduced(word):
            raise PresentationError(f"relators.{index}: relator {format_word(word)} is not cyclically reduced")
        words.append(word)
    return Presentation(generators=tuple(generators), relators=tuple(words))
