"""NormReader class: parses the s-expression norm file format

A norm file is a sequence of forms::

    (:prefix shRIOL "http://www.example.org/shRIOL#")
    (norm :id "shRIOL:CheckLawfulness" :kind obligation
          :target shRIOL:PersonalDataProcessing
          :require (shRIOL:is-lawful true))
    (norm :id "consent-lawful" :kind constitutive :order 2
          :target shRIOL:GiveConsent
          :if ((naf (class shRIOL:has-theme shRIOL:exceptionAgeDS)))
          :assert ((shRIOL:has-theme) shRIOL:is-lawful true))

`;` starts a comment that runs to the end of the line.
"""
import logging
from dataclasses import dataclass
from typing import Tuple

import pyparsing as pp

from python_src.errors import DuplicateNormError, MalformedLiteralError, NormSyntaxError
from python_src.input.graph import DEFAULT_PREFIXES
from python_src.input.path import make_path
from python_src.input.reader import read_text
from python_src.input.term import Iri, boolean, integer, string
from python_src.shacl.model import Constant, PathFrom, This
from .model import (
    Assert, CardinalityAtom, ClassAtom, CompareAtom, NafAtom, NormKind, NormRule, NormSet,
    Require, ValueAtom,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Token:
    kind: str  # "string" | "int" | "keyword" | "name"
    text: str
    loc: int


@dataclass(frozen=True)
class Form:
    items: Tuple
    loc: int


def _grammar():
    string_token = pp.QuotedString('"', esc_char="\\").set_parse_action(
        lambda s, loc, toks: Token("string", toks[0], loc))
    int_token = pp.Regex(r"[+-]?[0-9]+").set_parse_action(
        lambda s, loc, toks: Token("int", toks[0], loc))
    keyword_token = pp.Regex(r":[A-Za-z][A-Za-z\-]*").set_parse_action(
        lambda s, loc, toks: Token("keyword", toks[0], loc))
    name_token = pp.Regex(r"[A-Za-z_][A-Za-z0-9_\-]*(:[A-Za-z0-9_][A-Za-z0-9_\-]*)?").set_parse_action(
        lambda s, loc, toks: Token("name", toks[0], loc))

    form = pp.Forward()
    element = string_token | int_token | keyword_token | name_token | form
    form <<= (pp.Suppress("(") + pp.Group(pp.ZeroOrMore(element)) + pp.Suppress(")")).set_parse_action(
        lambda s, loc, toks: Form(tuple(toks[0]), loc))
    document = pp.ZeroOrMore(form) + pp.StringEnd()
    document.ignore(";" + pp.rest_of_line)
    return document


_GRAMMAR = _grammar()

_NORM_KEYS = (":id", ":kind", ":order", ":target", ":if", ":require", ":assert")
_ATOMS = ("class", "less-than", "equals", "min", "max", "has-value", "naf")


class NormReader:
    def __init__(self, text):
        self.text = text
        self.prefixes = dict(DEFAULT_PREFIXES)

    def run(self):
        """Parse the whole document into a NormSet"""
        try:
            forms = _GRAMMAR.parse_string(self.text, parse_all=True)
        except pp.ParseBaseException as exc:
            raise NormSyntaxError(exc.lineno, exc.col, f"cannot parse norm file: {exc.msg}") from exc

        norms, seen = [], set()
        for form in forms:
            head = self.head(form)
            if head == ":prefix":
                self.read_prefix(form)
            elif head == "norm":
                norm = self.read_norm(form)
                if norm.id in seen:
                    raise DuplicateNormError(norm.id)
                seen.add(norm.id)
                norms.append(norm)
            else:
                raise self.error(form, f"expected (norm ...) or (:prefix ...), got {head!r}")

        norm_set = NormSet(tuple(norms), dict(self.prefixes))
        logger.info("read %d obligations, %d permissions, %d constitutive rules",
                    len(norm_set.obligations), len(norm_set.permissions), len(norm_set.constitutive))
        return norm_set

    def error(self, item, reason):
        return NormSyntaxError(pp.lineno(item.loc, self.text), pp.col(item.loc, self.text), reason)

    @staticmethod
    def head(form):
        if not isinstance(form, Form) or not form.items or not isinstance(form.items[0], Token):
            return None
        return form.items[0].text

    def read_prefix(self, form):
        items = form.items
        if len(items) != 3 or not all(isinstance(item, Token) for item in items) \
                or items[1].kind != "name" or ":" in items[1].text or items[2].kind != "string":
            raise self.error(form, 'expected (:prefix NAME "namespace")')
        self.prefixes[items[1].text] = items[2].text

    def read_norm(self, form):
        fields = {}
        items = form.items[1:]
        if len(items) % 2:
            raise self.error(form, "norm keys and values must come in pairs")
        for key, value in zip(items[::2], items[1::2]):
            if not isinstance(key, Token) or key.kind != "keyword" or key.text not in _NORM_KEYS:
                raise self.error(key, f"unexpected norm key {getattr(key, 'text', '(...)')!r}")
            if key.text in fields:
                raise self.error(key, f"repeated key {key.text}")
            fields[key.text] = value

        for required in (":id", ":kind", ":target"):
            if required not in fields:
                raise self.error(form, f"norm is missing {required}")
        norm_id = self.expect(fields[":id"], "string").text
        kind_token = self.expect(fields[":kind"], "name")
        try:
            kind = NormKind(kind_token.text)
        except ValueError:
            raise self.error(kind_token, f"unknown norm kind {kind_token.text!r}") from None

        if (":require" in fields) == (":assert" in fields):
            raise self.error(form, f"norm {norm_id} needs exactly one of :require or :assert")
        if kind is NormKind.CONSTITUTIVE:
            if ":require" in fields:
                raise self.error(fields[":require"], f"constitutive norm {norm_id} must use :assert")
            consequent = self.read_assert(fields[":assert"], norm_id)
        else:
            if ":assert" in fields:
                raise self.error(fields[":assert"], f"{kind.value} {norm_id} must use :require")
            if ":order" in fields:
                raise self.error(fields[":order"], f"{kind.value} {norm_id} cannot carry an :order")
            consequent = self.read_require(fields[":require"], norm_id)

        antecedent = ()
        if ":if" in fields:
            condition = self.expect_form(fields[":if"])
            antecedent = tuple(self.read_atom(atom) for atom in condition.items)

        order = int(self.expect(fields[":order"], "int").text) if ":order" in fields else 0
        return NormRule(
            id=norm_id,
            kind=kind,
            target=self.curie(self.expect(fields[":target"], "name")),
            consequent=consequent,
            antecedent=antecedent,
            order=order,
        )

    def read_require(self, item, norm_id):
        form = self.expect_form(item)
        if self.head(form) == "naf":
            raise self.error(form, f"naf is not allowed in the consequent of {norm_id}")
        if len(form.items) != 2:
            raise self.error(form, "expected :require (path value)")
        return Require(self.path(form.items[0]), self.value(form.items[1]))

    def read_assert(self, item, norm_id):
        form = self.expect_form(item)
        if self.head(form) == "naf":
            raise self.error(form, f"naf is not allowed in the consequent of {norm_id}")
        if len(form.items) != 3:
            raise self.error(form, "expected :assert (subject predicate object)")
        subject, predicate, obj = form.items
        subject_spec = self.node_spec(subject)
        if isinstance(subject_spec, Constant) and not isinstance(subject_spec.term, Iri):
            raise self.error(subject, "a literal cannot be asserted as subject")
        return Assert(subject_spec, self.curie(self.expect(predicate, "name")), self.node_spec(obj))

    def read_atom(self, item):
        form = self.expect_form(item)
        head = self.head(form)
        if head not in _ATOMS:
            raise self.error(form, f"unknown atom {head!r}")
        args = form.items[1:]
        if head == "naf":
            if len(args) != 1:
                raise self.error(form, "expected (naf atom)")
            return NafAtom(self.read_atom(args[0]))
        if len(args) != 2:
            raise self.error(form, f"expected ({head} path argument)")
        path = self.path(args[0])
        if head == "class":
            return ClassAtom(path, self.curie(self.expect(args[1], "name")))
        if head in ("less-than", "equals"):
            return CompareAtom(head, path, self.curie(self.expect(args[1], "name")))
        if head in ("min", "max"):
            n = int(self.expect(args[1], "int").text)
            if n < 0:
                raise self.error(args[1], "cardinality must be non-negative")
            return CardinalityAtom(head, path, n)
        return ValueAtom(path, self.value(args[1]))

    def path(self, item):
        if isinstance(item, Token):
            if item.kind == "name" and item.text == "self":
                raise self.error(item, "self is only allowed as an asserted subject or object")
            return make_path([self.curie(self.expect(item, "name"))])
        if not item.items:
            raise self.error(item, "empty path")
        return make_path([self.curie(self.expect(step, "name")) for step in item.items])

    def node_spec(self, item):
        if isinstance(item, Form):
            return PathFrom(self.path(item))
        if item.kind == "name" and item.text == "self":
            return This()
        return Constant(self.value(item))

    def value(self, item):
        """A literal or a CURIE"""
        token = item if isinstance(item, Token) else None
        if token is None:
            raise self.error(item, "expected a literal or a CURIE")
        try:
            if token.kind == "int":
                return integer(token.text)
            if token.kind == "string":
                return string(token.text)
        except MalformedLiteralError as exc:
            raise self.error(token, str(exc)) from exc
        if token.kind == "name" and token.text in ("true", "false"):
            return boolean(token.text == "true")
        return self.curie(self.expect(token, "name"))

    def curie(self, token):
        prefix, sep, local = token.text.partition(":")
        if not sep:
            raise self.error(token, f"expected a CURIE, got {token.text!r}")
        if prefix not in self.prefixes:
            raise self.error(token, f"unknown prefix {prefix!r}")
        return Iri(self.prefixes[prefix] + local)

    def expect(self, item, kind):
        if not isinstance(item, Token) or item.kind != kind:
            raise self.error(item, f"expected a {kind}")
        return item

    def expect_form(self, item):
        if not isinstance(item, Form):
            raise self.error(item, "expected a parenthesised form")
        return item


def parse_norms(text):
    """Convenience function to parse a norm document"""
    return NormReader(text).run()


def read_norms(norms_file):
    """Convenience function to read a UTF-8 norm file"""
    return parse_norms(read_text(norms_file))
