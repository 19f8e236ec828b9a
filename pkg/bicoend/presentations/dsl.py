# Copyright (c) 2021, Google Inc.
# All rights reserved.
# 
# Redistribution and use in source and binary forms, with or without modification,
# are permitted provided that the following conditions are met:
# 
# 1. Redistributions of source code must retain the above copyright notice, this
#    list of conditions and the following disclaimer.
# 
# 2. Redistributions in binary form must reproduce the above copyright notice,
#    this list of conditions and the following disclaimer in the documentation
#    and/or other materials provided with the distribution.
# 
# 3. Neither the name of Google Inc. nor the names of its contributors
#    may be used to endorse or promote products derived from this software without
#    specific prior written permission.
# 
# THIS SOFTWARE IS PROVIDED BY THE COPYRIGHT HOLDERS AND CONTRIBUTORS "AS IS" AND
# ANY EXPRESS OR IMPLIED WARRANTIES, INCLUDING, BUT NOT LIMITED TO, THE IMPLIED
# WARRANTIES OF MERCHANTABILITY AND FITNESS FOR A PARTICULAR PURPOSE ARE
# DISCLAIMED. IN NO EVENT SHALL THE COPYRIGHT HOLDER OR CONTRIBUTORS BE LIABLE FOR
# ANY DIRECT, INDIRECT, INCIDENTAL, SPECIAL, EXEMPLARY, OR CONSEQUENTIAL DAMAGES
# (INCLUDING, BUT NOT LIMITED TO, PROCUREMENT OF SUBSTITUTE GOODS OR SERVICES;
# LOSS OF USE, DATA, OR PROFITS; OR BUSINESS INTERRUPTION) HOWEVER CAUSED AND ON
# ANY THEORY OF LIABILITY, WHETHER IN CONTRACT, STRICT LIABILITY, OR TORT
# (INCLUDING NEGLIGENCE OR OTHERWISE) ARISING IN ANY WAY OUT OF THE USE OF THIS
# SOFTWARE, EVEN IF ADVISED OF THE POSSIBILITY OF SUCH DAMAGE.
"""A block-structured text format for finite categorical data.

  category Z2 {
    objects *;
    arrows s: * -> *;
    relations s.s = id(*);
  }

A document is a sequence of blocks. Each block has a kind, a name, a header
whose form depends on the kind, and statements of the form
`keyword item, item, ...;`. Parsing only builds the syntax tree and checks
the shape of headers and items; `elaborate` resolves names and realizes the
blocks in order. docs/grammar.md has the full grammar.
"""

import bisect
import dataclasses
import re
from typing import Any, Dict, Iterator, List, Optional, Sequence, Tuple

from absl import logging
import ml_collections
import numpy as np

from bicoend.cat import fincat
from bicoend.derived import modification as modification_lib
from bicoend.extra import extranat
from bicoend.presentations import presentation
from bicoend.pseudo import pseudofunctor
from bicoend.pseudo import pseudonat
from bicoend.pseudo import twocat
from bicoend.utils import config as config_lib
from bicoend.utils import errors

_NAME = r'(?:"[^"]*"|[^\s"]+?)'
_WORD = r'(?:[^=]+?)'
_SHAPE = r'(?:.+?)'


def _form(pattern: str, template: str) -> Tuple[re.Pattern, str]:
  return re.compile(pattern.replace('N', _NAME).replace('W', _WORD).replace(
      'S', _SHAPE)), template


_MAPS_TO = _form(r'(N)\s*->\s*(N)', '{0} -> {1}')
_CELL_TYPE = _form(r':\s*(N)\s*=>\s*(N)', ': {0} => {1}')
_MAP_TYPE = _form(r':\s*(N)\s*->\s*(N)', ': {0} -> {1}')

# kind -> header forms, as (form name, pattern, template).
_HEADERS = {
    'category': {'plain': _form('', '')},
    'twocat': {'on': _form(r'on\s+(N)', ' on {0}')},
    'functor': {'map': _MAP_TYPE},
    'nat': {'cell': _CELL_TYPE},
    'pseudofunctor': {
        'on': _form(r'on\s+(S)', ' on {0}'),
        'hom': _form(r'=\s*hom\(\s*(S)\s*\)', ' = hom({0})'),
        'representable': _form(r'=\s*representable\(\s*(N)\s*,\s*(N)\s*\)',
                               ' = representable({0}, {1})'),
        'const': _form(r'=\s*const\(\s*(N)\s*\)\s+on\s+(S)',
                       ' = const({0}) on {1}'),
    },
    'pseudonat': {'cell': _CELL_TYPE},
    'extranat': {'map': _MAP_TYPE},
    'modification': {'cell': _CELL_TYPE},
}

# kind -> keyword -> item form.
_STATEMENTS = {
    'category': {
        'objects': _form(r'(N)', '{0}'),
        'arrows': _form(r'(N)\s*:\s*(N)\s*->\s*(N)', '{0}: {1} -> {2}'),
        'relations': _form(r'(W)\s*=\s*(W)', '{0} = {1}'),
    },
    'twocat': {
        'cells': _form(r'(N)\s*:\s*(N)\s*=>\s*(N)', '{0}: {1} => {2}'),
    },
    'functor': {'objects': _MAPS_TO, 'arrows': _MAPS_TO},
    'nat': {'components': _MAPS_TO},
    'pseudofunctor': {
        'values': _MAPS_TO,
        'maps': _MAPS_TO,
        'cells': _MAPS_TO,
        'coherence': _form(r'(N)\s+after\s+(N)\s*->\s*(N)',
                           '{0} after {1} -> {2}'),
        'units': _MAPS_TO,
    },
    'pseudonat': {'components': _MAPS_TO, 'cells': _MAPS_TO},
    'extranat': {'components': _MAPS_TO, 'cells': _MAPS_TO},
    'modification': {'components': _MAPS_TO},
}

BLOCK_KINDS = tuple(_HEADERS)

_KIND = re.compile(r'[A-Za-z]+')
_BLOCK_NAME = re.compile(r'"[^"]*"|[^\s"{}:;=,]+')
_KEYWORD = re.compile(r'([a-z]+)\b\s*')


@dataclasses.dataclass(frozen=True)
class Item:
  """One comma-separated item, split into its parts."""
  parts: Tuple[str, ...]
  template: str = dataclasses.field(compare=False)
  line: int = dataclasses.field(default=0, compare=False)
  column: int = dataclasses.field(default=0, compare=False)

  def text(self) -> str:
    return self.template.format(*self.parts)


@dataclasses.dataclass(frozen=True)
class Statement:
  keyword: str
  items: Tuple[Item, ...]
  line: int = dataclasses.field(default=0, compare=False)
  column: int = dataclasses.field(default=0, compare=False)


@dataclasses.dataclass(frozen=True)
class Block:
  """A declaration such as `functor F: X -> Y { ... }`.

  Attributes:
    kind: One of BLOCK_KINDS.
    name: The declared name.
    form: Which header form of the kind was used.
    args: The header arguments.
    statements: The body, in order.
    line: Line of the kind keyword.
    column: Column of the kind keyword.
  """
  kind: str
  name: str
  form: str
  args: Tuple[str, ...]
  statements: Tuple[Statement, ...]
  line: int = dataclasses.field(default=0, compare=False)
  column: int = dataclasses.field(default=0, compare=False)

  def header(self) -> str:
    _, template = _HEADERS[self.kind][self.form]
    return template.format(*self.args)

  def items(self, keyword: str) -> Iterator[Item]:
    for statement in self.statements:
      if statement.keyword == keyword:
        yield from statement.items


@dataclasses.dataclass(frozen=True)
class Document:
  blocks: Tuple[Block, ...]


class _Source:
  """The text with comments blanked out, and offset to line/column."""

  def __init__(self, text: str):
    self.text = _blank_comments(text)
    self._starts = [0] + [m.end() for m in re.finditer('\n', text)]

  def position(self, offset: int) -> Tuple[int, int]:
    line = bisect.bisect_right(self._starts, offset)
    return line, offset - self._starts[line - 1] + 1

  def error(self, message: str, offset: int) -> errors.DslSyntaxError:
    return errors.DslSyntaxError(message, *self.position(offset))


def _blank_comments(text: str) -> str:
  out = []
  quoted = comment = False
  for char in text:
    if char == '\n':
      quoted = comment = False
    elif comment:
      char = ' '
    elif char == '"':
      quoted = not quoted
    elif char == '#' and not quoted:
      comment = True
      char = ' '
    out.append(char)
  return ''.join(out)


def _split_top(text: str, separator: str, offset: int
              ) -> List[Tuple[str, int]]:
  """Splits on a separator outside brackets, parentheses and quotes."""
  pieces = []
  depth = 0
  quoted = False
  start = 0
  for i, char in enumerate(text):
    if char == '"':
      quoted = not quoted
    elif quoted:
      continue
    elif char in '([':
      depth += 1
    elif char in ')]':
      depth -= 1
    elif char == separator and depth == 0:
      pieces.append((text[start:i], offset + start))
      start = i + 1
  pieces.append((text[start:], offset + start))
  return pieces


def _strip(piece: str, offset: int) -> Tuple[str, int]:
  stripped = piece.lstrip()
  return stripped.rstrip(), offset + len(piece) - len(stripped)


def _collapse(text: str) -> str:
  return ' '.join(text.split())


def _parse_statement(source: _Source, kind: str, text: str,
                     offset: int) -> Statement:
  match = _KEYWORD.match(text)
  if not match:
    raise source.error(f'expected a keyword in {kind} block', offset)
  keyword = match.group(1)
  forms = _STATEMENTS[kind]
  if keyword not in forms:
    raise source.error(
        f'{keyword!r} is not a {kind} statement; expected one of '
        f'{sorted(forms)}', offset)
  pattern, template = forms[keyword]
  items = []
  rest = text[match.end():]
  if rest.strip():
    for piece, start in _split_top(rest, ',', offset + match.end()):
      piece, start = _strip(piece, start)
      found = pattern.fullmatch(piece)
      if not piece or not found:
        raise source.error(f'malformed {keyword} item {piece!r}', start)
      items.append(
          Item(tuple(_collapse(p) for p in found.groups()), template,
               *source.position(start)))
  return Statement(keyword, tuple(items), *source.position(offset))


def _parse_header(source: _Source, kind: str, header: str,
                  offset: int) -> Tuple[str, Tuple[str, ...]]:
  header = header.strip()
  for form, (pattern, _) in _HEADERS[kind].items():
    found = pattern.fullmatch(header)
    if found:
      return form, tuple(_collapse(g) for g in found.groups())
  raise source.error(f'malformed {kind} header {header!r}', offset)


def parse_document(text: str) -> Document:
  """Parses DSL text into blocks.

  Raises:
    DslSyntaxError: with the line and column of the first problem.
  """
  source = _Source(text)
  body = source.text
  blocks = []
  pos = 0
  while True:
    while pos < len(body) and body[pos].isspace():
      pos += 1
    if pos >= len(body):
      break
    kind_match = _KIND.match(body, pos)
    if not kind_match or kind_match.group() not in _HEADERS:
      raise source.error(
          f'expected one of {list(BLOCK_KINDS)} at the start of a block', pos)
    kind = kind_match.group()
    name_start = kind_match.end()
    while name_start < len(body) and body[name_start] in ' \t':
      name_start += 1
    name_match = _BLOCK_NAME.match(body, name_start)
    if name_start == kind_match.end() or not name_match:
      raise source.error(f'expected a name after {kind!r}', name_start)
    open_brace = body.find('{', name_match.end())
    if open_brace < 0:
      raise source.error(f"expected '{{' to open {kind} block", pos)
    form, args = _parse_header(source, kind,
                               body[name_match.end():open_brace],
                               name_match.end())
    close_brace = body.find('}', open_brace)
    if close_brace < 0:
      raise source.error(f'unterminated {kind} block', open_brace)
    pieces = _split_top(body[open_brace + 1:close_brace], ';',
                        open_brace + 1)
    last, last_offset = pieces.pop()
    if last.strip():
      raise source.error("expected ';' after statement",
                         _strip(last, last_offset)[1])
    statements = []
    for piece, start in pieces:
      piece, start = _strip(piece, start)
      if not piece:
        raise source.error('empty statement', start)
      statements.append(_parse_statement(source, kind, piece, start))
    if form != 'on' and kind == 'pseudofunctor' and statements:
      raise source.error(f'a {form} pseudofunctor has no statements',
                         open_brace)
    blocks.append(
        Block(kind, name_match.group(), form, args, tuple(statements),
              *source.position(pos)))
    pos = close_brace + 1
  if not blocks:
    raise errors.DslSyntaxError('empty document', 1, 1)
  return Document(tuple(blocks))


def print_block(block: Block) -> str:
  lines = [f'{block.kind} {block.name}{block.header()} {{']
  for statement in block.statements:
    items = ', '.join(item.text() for item in statement.items)
    lines.append(f'  {statement.keyword} {items};'
                 if items else f'  {statement.keyword};')
  lines.append('}')
  return '\n'.join(lines)


def print_document(document: Document) -> str:
  """Canonical text: one statement per line, blocks separated by a blank."""
  return '\n\n'.join(print_block(b) for b in document.blocks) + '\n'


def _name(part: str) -> str:
  if len(part) >= 2 and part[0] == part[-1] == '"':
    return part[1:-1]
  return part


def _category_block(block: Block) -> presentation.CatPresentation:
  objects = tuple(_name(i.parts[0]) for i in block.items('objects'))
  arrows = tuple(
      tuple(_name(p) for p in i.parts) for i in block.items('arrows'))
  untyped = presentation.CatPresentation(_name(block.name), objects, arrows)
  relations = []
  for item in block.items('relations'):
    left = presentation.typed_word(untyped, item.parts[0], line=item.line,
                                   column=item.column)
    right = presentation.typed_word(untyped, item.parts[1], line=item.line,
                                    column=item.column)
    relations.append((left, right))
  return presentation.CatPresentation(
      _name(block.name), objects, arrows, tuple(relations))


def parse_presentation(text: str) -> presentation.CatPresentation:
  """The first category block of a document.

  Raises:
    DslSyntaxError: if the text does not parse or declares no category.
    BoundaryError: if a relation is ill-typed.
  """
  for block in parse_document(text).blocks:
    if block.kind == 'category':
      return _category_block(block)
  raise errors.DslSyntaxError('no category block', 1, 1)


def presentation_block(p: presentation.CatPresentation) -> Block:
  forms = _STATEMENTS['category']
  statements = []
  if p.objects:
    statements.append(
        Statement('objects',
                  tuple(Item((o,), forms['objects'][1]) for o in p.objects)))
  if p.arrows:
    statements.append(
        Statement('arrows',
                  tuple(Item(tuple(a), forms['arrows'][1]) for a in p.arrows)))
  if p.relations:
    statements.append(
        Statement(
            'relations',
            tuple(
                Item((left.text(), right.text()), forms['relations'][1])
                for left, right in p.relations)))
  return Block('category', p.name, 'plain', (), tuple(statements))


def print_presentation(p: presentation.CatPresentation) -> str:
  return print_block(presentation_block(p)) + '\n'


@dataclasses.dataclass
class Environment:
  """Everything a document declares, by name, in declaration order.

  Attributes:
    document: The parsed document.
    values: name -> (kind, value).
    presentations: The presentation behind each category.
  """
  document: Document
  values: Dict[str, Tuple[str, Any]] = dataclasses.field(default_factory=dict)
  presentations: Dict[str, presentation.CatPresentation] = dataclasses.field(
      default_factory=dict)

  def of_kind(self, kind: str) -> Dict[str, Any]:
    return {n: v for n, (k, v) in self.values.items() if k == kind}

  def lookup(self, name: str, kinds: Sequence[str], item: Any) -> Any:
    name = _name(name)
    if name not in self.values or self.values[name][0] not in kinds:
      raise errors.BoundaryError(
          f'{name!r} is not a declared {" or ".join(kinds)}', item.line,
          item.column)
    return self.values[name][1]

  def shapes(self) -> Dict[str, twocat.Fin2Cat]:
    env = {n: twocat.locally_discrete(c)
           for n, c in self.of_kind('category').items()}
    env.update(self.of_kind('twocat'))
    return env

  def shape(self, expression: str, item: Any) -> twocat.Fin2Cat:
    try:
      return twocat.shape(expression, self.shapes())
    except errors.MalformedTables as e:
      raise errors.BoundaryError(str(e), item.line, item.column) from None


class _Located:
  """Re-raises table and boundary errors at the position of an item."""

  def __init__(self, item: Any):
    self.item = item

  def __enter__(self):
    return self

  def __exit__(self, exc_type, exc, tb):
    if exc_type is not None and issubclass(
        exc_type, (errors.MalformedTables, errors.BoundaryMismatch)
    ) and not isinstance(exc, errors.BoundaryError):
      raise errors.BoundaryError(str(exc), self.item.line,
                                 self.item.column) from exc
    return False


def _mapping(block: Block, keyword: str, resolve_key, resolve_value
            ) -> Dict[Any, Any]:
  out = {}
  for item in block.items(keyword):
    with _Located(item):
      out[resolve_key(item.parts[:-1], item)] = resolve_value(
          item.parts[-1], item)
  return out


def _total(block: Block, found: Dict[int, Any], names: Sequence[str],
           what: str) -> List[Any]:
  missing = [names[i] for i in range(len(names)) if i not in found]
  if missing:
    raise errors.BoundaryError(
        f'{block.name}: no {what} given for {missing}', block.line,
        block.column)
  return [found[i] for i in range(len(names))]


def _elaborate_category(env: Environment, block: Block,
                        config: ml_collections.ConfigDict) -> fincat.FinCat:
  p = _category_block(block)
  env.presentations[p.name] = p
  realization = presentation.realize(p, config.budget,
                                     config.enumeration_limit, config.seed)
  return realization.category


def _elaborate_twocat(env: Environment, block: Block,
                      config: ml_collections.ConfigDict) -> twocat.Fin2Cat:
  del config
  c = env.lookup(block.args[0], ['category'], block)
  generators = [tuple(_name(p) for p in item.parts)
                for item in block.items('cells')]
  with _Located(block):
    return twocat.locally_preordered(c, generators, _name(block.name))


def _elaborate_functor(env: Environment, block: Block,
                       config: ml_collections.ConfigDict) -> fincat.Fun:
  del config
  dom = env.lookup(block.args[0], ['category'], block)
  cod = env.lookup(block.args[1], ['category'], block)
  obj = _mapping(block, 'objects', lambda k, _: dom.obj(_name(k[0])),
                 lambda v, _: cod.obj(_name(v)))
  mor = _mapping(block, 'arrows', lambda k, _: dom.mor(_name(k[0])),
                 lambda v, _: cod.mor(_name(v)))
  with _Located(block):
    return fincat.extend_functor(dom, cod,
                                 _total(block, obj, dom.objects, 'image'),
                                 mor)


def _elaborate_nat(env: Environment, block: Block,
                   config: ml_collections.ConfigDict) -> fincat.Nat:
  del config
  source = env.lookup(block.args[0], ['functor'], block)
  target = env.lookup(block.args[1], ['functor'], block)
  if not (source.dom == target.dom and source.cod == target.cod):
    raise errors.BoundaryError(f'{block.name}: functors are not parallel',
                               block.line, block.column)
  comps = _mapping(block, 'components',
                   lambda k, _: source.dom.obj(_name(k[0])),
                   lambda v, _: source.cod.mor(_name(v)))
  return fincat.Nat(
      source, target,
      np.asarray(_total(block, comps, source.dom.objects, 'component'),
                 dtype=np.int64))


def _elaborate_pseudofunctor(env: Environment, block: Block,
                             config: ml_collections.ConfigDict
                            ) -> pseudofunctor.PseudoFun:
  del config
  name = _name(block.name)
  if block.form == 'hom':
    p = pseudofunctor.hom_functor(env.shape(block.args[0], block))
  elif block.form == 'representable':
    a = env.shape(block.args[0], block)
    with _Located(block):
      p = pseudofunctor.representable(a, a.obj(_name(block.args[1])))
  elif block.form == 'const':
    x = env.lookup(block.args[0], ['category'], block)
    p = pseudofunctor.constant_pseudofunctor(
        x, env.shape(block.args[1], block))
  else:
    dom = env.shape(block.args[0], block)

    def value(kind):
      return lambda v, item: env.lookup(v, [kind], item)

    obj = _mapping(block, 'values', lambda k, _: dom.obj(_name(k[0])),
                   value('category'))
    mor = _mapping(block, 'maps', lambda k, _: dom.one_cell(_name(k[0])),
                   value('functor'))
    cell = _mapping(block, 'cells', lambda k, _: dom.cell(_name(k[0])),
                    value('nat'))
    phi2 = _mapping(
        block, 'coherence', lambda k, _: (dom.one_cell(_name(k[0])),
                                          dom.one_cell(_name(k[1]))),
        value('nat'))
    phi0 = _mapping(block, 'units', lambda k, _: dom.obj(_name(k[0])),
                    value('nat'))
    with _Located(block):
      return pseudofunctor.extend_strict(
          name, dom, _total(block, obj, dom.objects, 'value'), mor, cell,
          phi2, phi0)
  return dataclasses.replace(p, name=name)


def _elaborate_pseudonat(env: Environment, block: Block,
                         config: ml_collections.ConfigDict
                        ) -> pseudonat.PseudoNat:
  del config
  source = env.lookup(block.args[0], ['pseudofunctor'], block)
  target = env.lookup(block.args[1], ['pseudofunctor'], block)
  dom = source.dom
  comps = _mapping(block, 'components', lambda k, _: dom.obj(_name(k[0])),
                   lambda v, item: env.lookup(v, ['functor'], item))
  cells = _mapping(block, 'cells', lambda k, _: dom.one_cell(_name(k[0])),
                   lambda v, item: env.lookup(v, ['nat'], item))
  with _Located(block):
    return pseudonat.extend_pseudonat(
        _name(block.name), source, target,
        _total(block, comps, dom.objects, 'component'), cells)


def _elaborate_extranat(env: Environment, block: Block,
                        config: ml_collections.ConfigDict
                       ) -> extranat.ExtraPseudoNat:
  del config
  source = env.lookup(block.args[0], ['pseudofunctor'], block)
  x = env.lookup(block.args[1], ['category'], block)
  if len(source.dom.factor_list) not in (2, 3):
    raise errors.BoundaryError(
        f'{source.name} is not on a shape B^op x B', block.line, block.column)
  b_shape = extranat.lift(source).dom.factor_list[2]
  comps = _mapping(block, 'components',
                   lambda k, _: b_shape.obj(_name(k[0])),
                   lambda v, item: env.lookup(v, ['functor'], item))
  cells = _mapping(block, 'cells',
                   lambda k, _: b_shape.one_cell(_name(k[0])),
                   lambda v, item: env.lookup(v, ['nat'], item))
  _total(block, comps, b_shape.objects, 'component')
  _total(block, cells, b_shape.one_cells, 'cell')
  return extranat.into_constant(_name(block.name), source, x, comps, cells)


def _elaborate_modification(env: Environment, block: Block,
                            config: ml_collections.ConfigDict
                           ) -> modification_lib.Modification:
  del config
  source = env.lookup(block.args[0], ['pseudonat'], block)
  target = env.lookup(block.args[1], ['pseudonat'], block)
  dom = source.dom
  comps = _mapping(block, 'components', lambda k, _: dom.obj(_name(k[0])),
                   lambda v, item: env.lookup(v, ['nat'], item))
  with _Located(block):
    return modification_lib.Modification(
        _name(block.name), source, target,
        tuple(_total(block, comps, dom.objects, 'component')))


_ELABORATORS = {
    'category': _elaborate_category,
    'twocat': _elaborate_twocat,
    'functor': _elaborate_functor,
    'nat': _elaborate_nat,
    'pseudofunctor': _elaborate_pseudofunctor,
    'pseudonat': _elaborate_pseudonat,
    'extranat': _elaborate_extranat,
    'modification': _elaborate_modification,
}


def elaborate(document: Document,
              config: Optional[ml_collections.ConfigDict] = None
             ) -> Environment:
  """Resolves names and realizes every block, in order.

  Args:
    document: The parsed document.
    config: Budgets for realizing categories.

  Returns:
    The environment. Nothing is checked beyond what construction requires.

  Raises:
    DslSyntaxError: if a name is declared twice.
    BoundaryError: if a name does not resolve or a value is ill-typed.
    BudgetExhausted: if a category does not realize within budget.
  """
  config = config or config_lib.get_config()
  env = Environment(document)
  for block in document.blocks:
    name = _name(block.name)
    if name in env.values:
      raise errors.DslSyntaxError(f'{name!r} is declared twice', block.line,
                                  block.column)
    with _Located(block):
      value = _ELABORATORS[block.kind](env, block, config)
    env.values[name] = (block.kind, value)
    logging.vlog(1, 'elaborated %s %s', block.kind, name)
  logging.info('elaborated %d blocks', len(document.blocks))
  return env


def load(text: str,
         config: Optional[ml_collections.ConfigDict] = None) -> Environment:
  return elaborate(parse_document(text), config)
