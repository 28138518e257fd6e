"""The 18 guideline checkers for the C++ subset.

Every checker is a listener: it receives pre-order notifications for its
subscribed node kinds and may use the unit's symbol table. Checkers never
fail; node shapes they do not recognize yield no finding.
"""

from __future__ import annotations

import re

from ..core import Rule
from ..model import Criticality, Priority, RuleDescriptor, SourceSpan
from ..symtab import ClassBinding, ScopeKind, Specifier, equal_signature

_LOWER_CAMEL = re.compile(r"[a-z][a-zA-Z0-9]*")
_UPPER_CAMEL = re.compile(r"[A-Z][a-zA-Z0-9]*")

_LOOPS = ("WhileStmt", "DoStmt", "ForStmt")
_BREAKABLE = _LOOPS + ("SwitchStmt",)


def _sub(*kinds):
    return tuple(("minicpp", k) for k in kinds)


def _op_span(node):
    """Span of the operator token recorded by the parser, if any."""
    try:
        return SourceSpan.point(
            node.span.file, int(node.attr("op_row")), int(node.attr("op_col"))
        )
    except (TypeError, ValueError):
        return node.span


def _condition_of(node):
    children = node.children
    if not children:
        return None
    if node.kind in ("IfStmt", "WhileStmt", "SwitchStmt"):
        return children[0]
    if node.kind == "DoStmt":
        return children[-1]
    if node.kind == "ForStmt" and node.attr("has_cond") == "true":
        index = len(children) - 2  # body is last
        if node.attr("has_step") == "true":
            index -= 1
        if 0 <= index < len(children):
            return children[index]
    return None


class ConstructorChecker(Rule):
    descriptor = RuleDescriptor(
        id="ConstructorChecker",
        title="Constructor order checker",
        description="Checks that members are ordered: constructors, destructor, other methods.",
        reference="",
        priority=Priority.SHOULD,
        criticality=Criticality.LOW,
        subscriptions=_sub("ClassDef"),
    )

    _RANK = {"Constructor": 0, "Destructor": 1, "FunctionDef": 2}

    def visit(self, node, ctx):
        max_rank = -1
        for member in node.children:
            rank = self._RANK.get(member.kind)
            if rank is None:
                continue
            if rank < max_rank:
                ctx.report(
                    member.span,
                    "Member %r of class %r is declared out of order "
                    "(expected constructors, then destructor, then other methods)."
                    % (member.attr("name"), node.attr("name")),
                )
            else:
                max_rank = rank


class DestructorChecker(Rule):
    descriptor = RuleDescriptor(
        id="DestructorChecker",
        title="Virtual destructor checker",
        description="Checks that polymorphic and derived classes declare a virtual destructor.",
        reference="",
        priority=Priority.SHALL,
        criticality=Criticality.MEDIUM,
        subscriptions=_sub("ClassDef"),
    )

    def visit(self, node, ctx):
        has_base = any(c.kind == "BaseSpec" for c in node.children)
        has_virtual = any(
            c.kind == "FunctionDef"
            and (c.attr("virtual") == "true" or c.attr("pure") == "true")
            for c in node.children
        )
        if not (has_base or has_virtual):
            return
        dtor = next((c for c in node.children if c.kind == "Destructor"), None)
        if dtor is None or dtor.attr("virtual") != "true":
            ctx.report(
                node.span,
                "Class %r must declare a virtual destructor." % node.attr("name"),
            )


class EnumChecker(Rule):
    descriptor = RuleDescriptor(
        id="EnumChecker",
        title="Enum declaration checker",
        description="Checks that enums are named and initialize all enumerators or none.",
        reference="",
        priority=Priority.SHOULD,
        criticality=Criticality.LOW,
        subscriptions=_sub("EnumDef"),
    )

    def visit(self, node, ctx):
        if not node.attr("name"):
            ctx.report(node.span, "Anonymous enum declaration.")
        inits = [
            e.attr("has_init") == "true"
            for e in node.children
            if e.kind == "Enumerator"
        ]
        if inits and any(inits) and not all(inits):
            ctx.report(
                node.span,
                "Enum %r mixes initialized and uninitialized enumerators."
                % node.attr("name"),
            )


class ExpressionChecker(Rule):
    descriptor = RuleDescriptor(
        id="ExpressionChecker",
        title="Logical expression checker",
        description="Checks for '&&' and '||' mixed without parentheses.",
        reference="",
        priority=Priority.SHOULD,
        criticality=Criticality.MEDIUM,
        subscriptions=_sub("BinaryExpr"),
    )

    def visit(self, node, ctx):
        op = node.attr("operator")
        if op not in ("&&", "||"):
            return
        for child in node.children:
            if (
                child.kind == "BinaryExpr"
                and child.attr("operator") in ("&&", "||")
                and child.attr("operator") != op
            ):
                ctx.report(
                    _op_span(node),
                    "Mixed '&&' and '||' without parentheses.",
                )
                return


class ExpressionAssignmentChecker(Rule):
    descriptor = RuleDescriptor(
        id="ExpressionAssignmentChecker",
        title="Assignment in condition checker",
        description="Checks for assignments inside selection and loop conditions.",
        reference="",
        priority=Priority.SHALL,
        criticality=Criticality.HIGH,
        subscriptions=_sub("IfStmt", "WhileStmt", "DoStmt", "ForStmt", "SwitchStmt"),
    )

    def visit(self, node, ctx):
        condition = _condition_of(node)
        if condition is None:
            return
        for sub in condition.walk():
            if sub.kind == "AssignExpr":
                ctx.report(
                    _op_span(sub),
                    "Assignment inside a condition expression.",
                )


class FlowControlChecker(Rule):
    descriptor = RuleDescriptor(
        id="FlowControlChecker",
        title="Flow control checker",
        description="Checks for gotos, labels, and breaks used to leave loops.",
        reference="",
        priority=Priority.SHALL,
        criticality=Criticality.MEDIUM,
        subscriptions=_sub("GotoStmt", "LabelStmt", "WhileStmt", "DoStmt", "ForStmt"),
    )

    def visit(self, node, ctx):
        if node.kind == "GotoStmt":
            ctx.report(node.span, "'goto' statement used.")
        elif node.kind == "LabelStmt":
            ctx.report(node.span, "Label %r declared." % node.attr("name"))
        else:
            body = node.children[-1] if node.children else None
            if body is not None:
                for brk in _direct_breaks(body):
                    ctx.report(brk.span, "'break' used to leave a loop.")


def _direct_breaks(node):
    """Break statements whose nearest enclosing breakable is the caller."""
    found = []
    stack = [node]
    while stack:
        current = stack.pop()
        if current.kind == "BreakStmt":
            found.append(current)
            continue
        if current.kind in _BREAKABLE:
            continue
        stack.extend(reversed(current.children))
    return found


class FunctionChecker(Rule):
    descriptor = RuleDescriptor(
        id="FunctionChecker",
        title="Function usage checker",
        description="Checks function length, parameter count, and naming.",
        reference="",
        priority=Priority.SHOULD,
        criticality=Criticality.LOW,
        subscriptions=_sub("FunctionDef"),
        default_properties=(("maxLines", "100"), ("maxParams", "6")),
    )

    def visit(self, node, ctx):
        name = node.attr("name")
        body = next((c for c in node.children if c.kind == "CompoundStmt"), None)
        if body is not None:
            lines = body.span.end_row - body.span.row + 1
            try:
                max_lines = int(ctx.prop("maxLines", "100"))
            except ValueError:
                max_lines = 100
            if lines > max_lines:
                ctx.report(
                    node.span,
                    "Function %r has %d body lines (maximum is %d)."
                    % (name, lines, max_lines),
                )
        params = sum(1 for c in node.children if c.kind == "ParamDecl")
        try:
            max_params = int(ctx.prop("maxParams", "6"))
        except ValueError:
            max_params = 6
        if params > max_params:
            ctx.report(
                node.span,
                "Function %r has %d parameters (maximum is %d)."
                % (name, params, max_params),
            )
        if name and not _LOWER_CAMEL.fullmatch(name):
            ctx.report(node.span, "Function %r is not named in lowerCamelCase." % name)


class IdentifierChecker(Rule):
    descriptor = RuleDescriptor(
        id="IdentifierChecker",
        title="Naming conventions checker",
        description="Checks whether identifier naming is unique.",
        reference="MISRA AV Rule 48",
        priority=Priority.SHOULD,
        criticality=Criticality.LOW,
        subscriptions=_sub("TranslationUnit"),
    )

    def finish(self, ctx):
        table = ctx.table
        if table is None:
            return
        variables = [v for v in table.variables if v.name and v.scope is not None]
        for i, inner in enumerate(variables):
            for j, other in enumerate(variables):
                if i == j:
                    continue
                if _normalize(inner.name) != _normalize(other.name):
                    continue
                if not (
                    inner.scope.is_ancestor_or_self(other.scope)
                    or other.scope.is_ancestor_or_self(inner.scope)
                ):
                    continue
                if not _reports_here(inner, other, i, j):
                    continue
                similar = '"%s : %s"' % (other.name, other.declared_type)
                if other.is_member:
                    similar = "instance variable " + similar
                ctx.report(
                    inner.decl_span,
                    '%s "%s" is named similar to %s.'
                    % (_var_label(inner), inner.name, similar),
                )


def _normalize(name):
    return name.lower().replace("_", "")


def _var_label(binding):
    if binding.is_member:
        return "Instance Variable"
    if binding.is_parameter:
        return "Parameter"
    return "Local Variable"


def _depth(scope):
    return sum(1 for _ in scope.chain())


def _reports_here(inner, other, i, j):
    """The finding goes to the inner binding; to the later one on ties."""
    d_inner, d_other = _depth(inner.scope), _depth(other.scope)
    if d_inner != d_other:
        return d_inner > d_other
    return i > j


class IfChecker(Rule):
    descriptor = RuleDescriptor(
        id="IfChecker",
        title="If-brace checker",
        description="Checks that if and else branches are brace-enclosed.",
        reference="",
        priority=Priority.SHOULD,
        criticality=Criticality.LOW,
        subscriptions=_sub("IfStmt"),
    )

    def visit(self, node, ctx):
        if len(node.children) < 2:
            return
        then = node.children[1]
        if then.kind != "CompoundStmt":
            ctx.report(then.span, "If branch without braces.")
        if node.attr("has_else") == "true" and len(node.children) > 2:
            other = node.children[2]
            if other.kind not in ("CompoundStmt", "IfStmt"):  # else-if is exempt
                ctx.report(other.span, "Else branch without braces.")


class InitializedVariableChecker(Rule):
    descriptor = RuleDescriptor(
        id="InitializedVariableChecker",
        title="Variable initialization checker",
        description="Checks that local variables are initialized at declaration.",
        reference="",
        priority=Priority.SHALL,
        criticality=Criticality.MEDIUM,
        subscriptions=_sub("VarDecl"),
    )

    def visit(self, node, ctx):
        table = ctx.table
        binding = table.binding_of(node) if table is not None else None
        if binding is None or binding.scope is None:
            return
        if binding.is_member or binding.is_parameter:
            return
        if binding.scope.kind not in (ScopeKind.FUNCTION, ScopeKind.BLOCK):
            return
        if not binding.has_initializer:
            ctx.report(
                node.span,
                "Local variable %r is not initialized." % binding.name,
            )


class InterfaceChecker(Rule):
    descriptor = RuleDescriptor(
        id="InterfaceChecker",
        title="Interface Checker",
        description="Checks for correct interface usage.",
        reference="",
        priority=Priority.SHALL,
        criticality=Criticality.LOW,
        subscriptions=_sub("ClassDef"),
        default_properties=(("CloseAPI", "true"),),
    )

    def visit(self, node, ctx):
        table = ctx.table
        binding = table.binding_of(node) if table is not None else None
        if not isinstance(binding, ClassBinding):
            return
        if binding.has_only_interface_methods():
            return
        interfaces = [
            base
            for base in binding.inherited_classes()
            if base.has_only_interface_methods()
        ]
        if not ctx.prop_bool("CloseAPI") and not interfaces:
            return
        declared = []
        for base in interfaces:
            if binding.specifier_of_inherited(base) is Specifier.PUBLIC:
                declared.extend(
                    fn
                    for fn in base.all_functions()
                    if fn.has_specifier(Specifier.PUBLIC)
                )
        for fn in binding.all_functions():
            if not fn.has_specifier(Specifier.PUBLIC):
                continue
            if fn.is_constructor or fn.is_destructor:
                continue
            if fn.has_specifier(Specifier.STATIC):
                continue
            if any(equal_signature(fn, d) for d in declared):
                continue
            ctx.report(
                node.span,
                "Class %s has public functions not declared in interfaces: %s"
                % (binding.name, fn.signature()),
            )


class MemoryChecker(Rule):
    descriptor = RuleDescriptor(
        id="MemoryChecker",
        title="Memory handling checker",
        description="Checks that memory allocated with new is freed in the same function.",
        reference="",
        priority=Priority.SHALL,
        criticality=Criticality.HIGH,
        subscriptions=_sub("FunctionDef", "Constructor", "Destructor"),
    )

    def visit(self, node, ctx):
        body = next((c for c in node.children if c.kind == "CompoundStmt"), None)
        if body is None:
            return
        allocs = {}  # variable name -> (is array allocation, span)
        deletes = {}  # variable name -> set of array flags
        escaped = set()
        scope = ctx.table.scope_of(body) if ctx.table is not None else None

        for sub in _function_body_nodes(body):
            if sub.kind == "VarDecl":
                new_expr = next(
                    (c for c in sub.children if c.kind == "NewExpr"), None
                )
                if new_expr is not None:
                    allocs[sub.attr("name")] = (
                        new_expr.attr("array") == "true",
                        sub.span,
                    )
            elif sub.kind == "AssignExpr" and len(sub.children) == 2:
                lhs, rhs = sub.children
                if rhs.kind == "NewExpr" and lhs.kind == "IdentExpr":
                    allocs.setdefault(
                        lhs.attr("name"), (rhs.attr("array") == "true", sub.span)
                    )
                if rhs.kind == "IdentExpr" and _is_nonlocal_target(lhs, scope):
                    escaped.add(rhs.attr("name"))
            elif sub.kind == "DeleteExpr" and sub.children:
                operand = sub.children[0]
                if operand.kind == "IdentExpr":
                    deletes.setdefault(operand.attr("name"), set()).add(
                        sub.attr("array") == "true"
                    )
            elif sub.kind == "ReturnStmt" and sub.children:
                value = sub.children[0]
                if value.kind == "IdentExpr":
                    escaped.add(value.attr("name"))

        for name, (is_array, span) in allocs.items():
            if name in escaped:
                continue
            freed = deletes.get(name)
            if not freed:
                ctx.report(
                    span,
                    "Variable %r is allocated with new but never freed." % name,
                )
            elif is_array not in freed:
                ctx.report(
                    span,
                    "Variable %r is freed with the wrong delete form "
                    "(new[] pairs with delete[])." % name,
                )


def _function_body_nodes(body):
    # do not descend into local class definitions
    stack = [body]
    while stack:
        node = stack.pop()
        yield node
        for child in reversed(node.children):
            if child.kind != "ClassDef":
                stack.append(child)


def _is_nonlocal_target(lhs, scope):
    if lhs.kind == "MemberExpr":
        return True
    if lhs.kind == "IdentExpr" and scope is not None:
        binding = scope.lookup(lhs.attr("name"))
        if binding is None:
            return False
        if getattr(binding, "is_member", False) or getattr(
            binding, "is_parameter", False
        ):
            return True
        target_scope = getattr(binding, "scope", None)
        return target_scope is not None and target_scope.kind in (
            ScopeKind.GLOBAL,
            ScopeKind.NAMESPACE,
        )
    return False


class NamingConventionChecker(Rule):
    descriptor = RuleDescriptor(
        id="NamingConventionChecker",
        title="Naming convention checker",
        description="Checks class, variable, and function naming conventions.",
        reference="",
        priority=Priority.SHOULD,
        criticality=Criticality.LOW,
        subscriptions=_sub("ClassDef", "VarDecl", "FunctionDef"),
        default_properties=(("hungarianPrefixes", "sz,psz,lp,dw,p_,i_,b_"),),
    )

    def visit(self, node, ctx):
        name = node.attr("name")
        if not name:
            return
        if node.kind == "ClassDef":
            if not _UPPER_CAMEL.fullmatch(name):
                ctx.report(
                    node.span, "Class %r is not named in UpperCamelCase." % name
                )
        elif node.kind == "FunctionDef":
            if not _LOWER_CAMEL.fullmatch(name):
                ctx.report(
                    node.span, "Function %r is not named in lowerCamelCase." % name
                )
        else:
            if not _LOWER_CAMEL.fullmatch(name):
                ctx.report(
                    node.span, "Variable %r is not named in lowerCamelCase." % name
                )
            prefixes = [
                p.strip()
                for p in ctx.prop("hungarianPrefixes").split(",")
                if p.strip()
            ]
            for prefix in prefixes:
                rest = name[len(prefix) :]
                if name.startswith(prefix) and rest and (
                    prefix.endswith("_") or rest[0].isupper()
                ):
                    ctx.report(
                        node.span,
                        "Variable %r uses the Hungarian prefix %r." % (name, prefix),
                    )
                    break


class NamespaceChecker(Rule):
    descriptor = RuleDescriptor(
        id="NamespaceChecker",
        title="Namespace usage checker",
        description="Checks for global using-directives and declarations outside namespaces.",
        reference="",
        priority=Priority.SHOULD,
        criticality=Criticality.LOW,
        subscriptions=_sub("TranslationUnit", "UsingDirective"),
    )

    def visit(self, node, ctx):
        if node.kind == "UsingDirective":
            table = ctx.table
            scope = table.scope_of(node) if table is not None else None
            if scope is not None and scope.kind is ScopeKind.GLOBAL:
                ctx.report(
                    node.span,
                    "'using namespace %s' at global scope." % node.attr("name"),
                )
            return
        for child in node.children:
            if child.kind == "ClassDef":
                ctx.report(
                    child.span,
                    "Class %r declared outside any namespace." % child.attr("name"),
                )
            elif child.kind == "FunctionDef" and child.attr("name") != "main":
                ctx.report(
                    child.span,
                    "Function %r declared outside any namespace."
                    % child.attr("name"),
                )


class SingleLetterVariableChecker(Rule):
    descriptor = RuleDescriptor(
        id="SingleLetterVariableChecker",
        title="Single-letter variable checker",
        description="Checks for variable names consisting of a single letter.",
        reference="",
        priority=Priority.SHOULD,
        criticality=Criticality.LOW,
        subscriptions=_sub("VarDecl"),
        default_properties=(("allowLoopIndices", "true"),),
    )

    def visit(self, node, ctx):
        name = node.attr("name")
        if len(name) != 1:
            return
        table = ctx.table
        binding = table.binding_of(node) if table is not None else None
        if (
            binding is not None
            and binding.is_loop_index
            and ctx.prop_bool("allowLoopIndices")
        ):
            return
        ctx.report(node.span, "Variable %r has a single-letter name." % name)


class SwitchChecker(Rule):
    descriptor = RuleDescriptor(
        id="SwitchChecker",
        title="Switch-brace checker",
        description="Checks switch statements for braces, default clauses, and fallthrough.",
        reference="",
        priority=Priority.SHALL,
        criticality=Criticality.MEDIUM,
        subscriptions=_sub("SwitchStmt"),
    )

    def visit(self, node, ctx):
        clauses = [
            c for c in node.children if c.kind in ("CaseClause", "DefaultClause")
        ]
        if not any(c.kind == "DefaultClause" for c in clauses):
            ctx.report(node.span, "Switch statement has no default clause.")
        for clause in clauses:
            body = clause.children[1:] if clause.kind == "CaseClause" else clause.children
            if not body:
                continue
            if len(body) != 1 or body[0].kind != "CompoundStmt":
                ctx.report(clause.span, "Switch clause body without braces.")
                last = body[-1]
            else:
                if not body[0].children:
                    continue
                last = body[0].children[-1]
            if last.kind not in ("BreakStmt", "ReturnStmt"):
                ctx.report(
                    clause.span, "Switch clause falls through (no break or return)."
                )


class SymbolOrderChecker(Rule):
    descriptor = RuleDescriptor(
        id="SymbolOrderChecker",
        title="Declaration order checker",
        description="Checks that block-local declarations precede other statements.",
        reference="",
        priority=Priority.SHOULD,
        criticality=Criticality.LOW,
        subscriptions=_sub("CompoundStmt"),
    )

    _DECLS = ("VarDecl", "TypedefDecl", "EnumDef", "ClassDef")

    def visit(self, node, ctx):
        seen_statement = False
        for child in node.children:
            if child.kind in self._DECLS:
                if seen_statement and child.kind == "VarDecl":
                    ctx.report(
                        child.span,
                        "Declaration of %r after the first statement of the block."
                        % child.attr("name"),
                    )
            else:
                seen_statement = True


class TypeDefChecker(Rule):
    descriptor = RuleDescriptor(
        id="TypeDefChecker",
        title="Typedef naming checker",
        description="Checks that typedef names match the configured pattern.",
        reference="",
        priority=Priority.SHOULD,
        criticality=Criticality.LOW,
        subscriptions=_sub("TypedefDecl"),
        default_properties=(("pattern", ".*_t"),),
    )

    def visit(self, node, ctx):
        name = node.attr("name")
        if not name:
            return
        try:
            pattern = re.compile(ctx.prop("pattern", ".*_t"))
        except re.error:
            return
        if not pattern.fullmatch(name):
            ctx.report(
                node.span,
                "Typedef %r does not match the pattern %r."
                % (name, ctx.prop("pattern")),
            )


CPP_RULES = (
    ConstructorChecker,
    DestructorChecker,
    EnumChecker,
    ExpressionChecker,
    ExpressionAssignmentChecker,
    FlowControlChecker,
    FunctionChecker,
    IdentifierChecker,
    IfChecker,
    InitializedVariableChecker,
    InterfaceChecker,
    MemoryChecker,
    NamingConventionChecker,
    NamespaceChecker,
    SingleLetterVariableChecker,
    SwitchChecker,
    SymbolOrderChecker,
    TypeDefChecker,
)
