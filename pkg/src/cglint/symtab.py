"""Scoped symbol table over the syntax graph.

Holds the bindings queried by rules (class/function/variable) and the
type-name lookup the C++ parser uses to disambiguate declarations from
expressions. Tables are built per unit and are read-only once built.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .model import Diagnostic


class ScopeKind(enum.Enum):
    GLOBAL = "GLOBAL"
    NAMESPACE = "NAMESPACE"
    CLASS = "CLASS"
    FUNCTION = "FUNCTION"
    BLOCK = "BLOCK"


class Specifier(enum.Enum):
    PUBLIC = "PUBLIC"
    PROTECTED = "PROTECTED"
    PRIVATE = "PRIVATE"
    VIRTUAL = "VIRTUAL"
    PURE_VIRTUAL = "PURE_VIRTUAL"
    STATIC = "STATIC"
    CONST = "CONST"


class TypeCategory(enum.Enum):
    TYPE = "TYPE"
    CONSTRUCTOR = "CONSTRUCTOR"
    VARIABLE = "VARIABLE"
    FUNCTION = "FUNCTION"
    NAMESPACE = "NAMESPACE"


@dataclass
class Scope:
    kind: ScopeKind
    name: str | None = None
    parent: "Scope | None" = None
    owner_node_id: int = 0
    declarations: list = field(default_factory=list)
    children: list = field(default_factory=list)

    def declare(self, binding):
        self.declarations.append(binding)
        binding.scope = self

    def lookup_local(self, name):
        for binding in self.declarations:
            if binding.name == name:
                return binding
        return None

    def lookup(self, name):
        scope = self
        while scope is not None:
            binding = scope.lookup_local(name)
            if binding is not None:
                return binding
            scope = scope.parent
        return None

    def chain(self):
        scope = self
        while scope is not None:
            yield scope
            scope = scope.parent

    def is_ancestor_or_self(self, other):
        return any(s is self for s in other.chain())


@dataclass
class TypeBinding:
    """A plain type name: an enum or a typedef."""

    name: str
    type_kind: str  # "enum" | "typedef"
    decl_span: object = None
    scope: Scope = None


@dataclass
class VariableBinding:
    name: str
    declared_type: str = ""
    scope: Scope = None
    has_initializer: bool = False
    is_member: bool = False
    is_parameter: bool = False
    is_loop_index: bool = False
    decl_span: object = None


@dataclass
class FunctionBinding:
    name: str
    owner: "ClassBinding | None" = None
    specifiers: set = field(default_factory=set)
    parameter_types: list = field(default_factory=list)
    return_type: str = ""
    body_span: object = None
    is_constructor: bool = False
    is_destructor: bool = False
    decl_span: object = None
    scope: Scope = None

    def has_specifier(self, spec):
        return spec in self.specifiers

    def signature(self):
        """Render as ``name : RETURNTYPE`` (return type upper-cased)."""
        return "%s : %s" % (self.name, self.return_type.upper())


def equal_signature(f, g):
    return (
        f.name == g.name
        and _norm_types(f.parameter_types) == _norm_types(g.parameter_types)
        and _norm(f.return_type) == _norm(g.return_type)
    )


def _norm(type_name):
    return " ".join(type_name.split())


def _norm_types(types):
    return [_norm(t) for t in types]


@dataclass
class ClassBinding:
    name: str
    scope: Scope = None  # the CLASS scope this binding owns
    bases: list = field(default_factory=list)  # (ClassBinding | None, Specifier, name)
    functions: list = field(default_factory=list)
    data_members: list = field(default_factory=list)
    decl_span: object = None

    def inherited_classes(self):
        return [base for base, _access, _name in self.bases if base is not None]

    def specifier_of_inherited(self, inherited):
        for base, access, _name in self.bases:
            if base is inherited:
                return access
        return None

    def all_functions(self):
        return list(self.functions)

    def has_only_interface_methods(self):
        """True iff there are no data members and every member function is
        pure virtual; the destructor is exempt."""
        if self.data_members:
            return False
        for fn in self.functions:
            if fn.is_destructor:
                continue
            if not fn.has_specifier(Specifier.PURE_VIRTUAL):
                return False
        return True


class SymbolTable:
    """Per-unit scope tree plus node-to-scope/binding indexes.

    Built incrementally: the parser feeds type declarations while parsing,
    the symbol workflow then builds the full binding set from the AST.
    """

    def __init__(self, file=""):
        self.file = file
        self.global_scope = Scope(ScopeKind.GLOBAL)
        self.diagnostics = []
        self._scope_by_node = {}
        self._binding_by_node = {}
        self.classes = []
        self.functions = []
        self.variables = []

    def open_scope(self, kind, name=None, parent=None, owner_node_id=0):
        parent = parent if parent is not None else self.global_scope
        scope = Scope(kind, name=name, parent=parent, owner_node_id=owner_node_id)
        parent.children.append(scope)
        return scope

    def declare(self, scope, binding, span=None):
        if binding.name and scope.lookup_local(binding.name) is not None:
            self.diagnostics.append(
                Diagnostic(span, "duplicate declaration of %r" % binding.name, fatal=False)
            )
        scope.declare(binding)
        if isinstance(binding, ClassBinding):
            self.classes.append(binding)
        elif isinstance(binding, FunctionBinding):
            self.functions.append(binding)
        elif isinstance(binding, VariableBinding):
            self.variables.append(binding)
        return binding

    def bind_node(self, node, scope=None, binding=None):
        if scope is not None:
            self._scope_by_node[node.node_id] = scope
        if binding is not None:
            self._binding_by_node[node.node_id] = binding

    def scope_of(self, node):
        """Innermost scope enclosing ``node``; GLOBAL is the fallback.
        Scope-owning nodes map to their own scope."""
        return self._scope_by_node.get(node.node_id, self.global_scope)

    def binding_of(self, node):
        return self._binding_by_node.get(node.node_id)

    def is_type_name(self, scope, ident):
        """Resolve ``ident`` along the scope chain.

        Returns (True, TYPE) for class/enum/typedef names, (True,
        CONSTRUCTOR) when the identifier names an enclosing class, and
        (False, None) otherwise.
        """
        for s in scope.chain():
            if s.kind is ScopeKind.CLASS and s.name == ident:
                return True, TypeCategory.CONSTRUCTOR
            binding = s.lookup_local(ident)
            if isinstance(binding, (ClassBinding, TypeBinding)):
                return True, TypeCategory.TYPE
        return False, None

    def resolve_qualified(self, scope, parts):
        """Resolve a qualified name like ``A::B`` to its final binding, by
        descending named scopes from the first resolvable segment."""
        if len(parts) == 1:
            return scope.lookup(parts[0])
        current = None
        for s in scope.chain():
            for child in s.children:
                if child.name == parts[0] and child.kind in (
                    ScopeKind.NAMESPACE,
                    ScopeKind.CLASS,
                ):
                    current = child
                    break
            if current is not None:
                break
        if current is None:
            return None
        for part in parts[1:-1]:
            nxt = None
            for child in current.children:
                if child.name == part:
                    nxt = child
                    break
            if nxt is None:
                return None
            current = nxt
        return current.lookup_local(parts[-1])


_BUILDERS = {}


def register_builder(language, builder):
    _BUILDERS[language] = builder


def build_symbols(root):
    """Run the symbol workflow for ``root`` and attach the table to it."""
    if root.ast is None:
        root.symbols = SymbolTable(root.file)
        return root.symbols
    builder = _BUILDERS[root.ast.language]
    table = builder(root)
    root.diagnostics.extend(table.diagnostics)
    root.symbols = table
    return table
