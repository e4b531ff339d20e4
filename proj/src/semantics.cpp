// Copyright 2026 The ogk Authors.
// SPDX-License-Identifier: Apache-2.0

#include "ogk/semantics.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <memory>
#include <regex>
#include <sstream>

#include "ogk/limits.hpp"

namespace ogk::semantics {

namespace {

constexpr std::size_t kMaxPowersetBase = 16;
constexpr std::size_t kMaxCarrier = std::size_t{1} << 22;
constexpr std::size_t kMaxPairs = std::size_t{1} << 24;
constexpr std::size_t kDetectorSearchMax = 4;
constexpr std::uint64_t kFamilyStages = 64;

constexpr std::size_t kNo = 0;
constexpr std::size_t kYes = 1;

// Interpretation of one generator expression.
struct Sem {
  enum class Kind { Atoms, Product, Powerset };
  Kind kind = Kind::Atoms;
  std::string carrier;  // Atoms: "two", "nat" or the generator name
  std::vector<std::string> atoms;
  std::shared_ptr<const Sem> left, right, base;
  bool drops_empty = false;  // Powerset under the corruption hook
  std::size_t n = 0;

  std::uint64_t mask(std::size_t i) const { return i + (drops_empty ? 1 : 0); }
  std::optional<std::size_t> index_of_mask(std::uint64_t m) const {
    if (drops_empty && m == 0) return std::nullopt;
    return static_cast<std::size_t>(m - (drops_empty ? 1 : 0));
  }

  std::string tag(std::size_t i) const {
    switch (kind) {
      case Kind::Atoms: return atoms[i];
      case Kind::Product: return "(" + left->tag(i / right->n) + "," + right->tag(i % right->n) + ")";
      case Kind::Powerset: {
        std::string s = "{";
        std::uint64_t m = mask(i);
        for (std::size_t b = 0; b < base->n; ++b) s += ((m >> b) & 1) ? '1' : '0';
        return s + "}";
      }
    }
    return {};
  }
};

using SemPtr = std::shared_ptr<const Sem>;

struct Ctx {
  const Model& model;
  bool truncated = false;
};

SemPtr build(const GenExpr& g, Ctx& cx) {
  auto s = std::make_shared<Sem>();
  switch (g.kind()) {
    case GenExpr::Kind::Two:
      s->carrier = "two";
      s->atoms = {"no", "yes"};
      break;
    case GenExpr::Kind::Nat:
      cx.truncated = true;
      s->carrier = "nat";
      for (std::uint64_t k = 0; k <= cx.model.nat_bound; ++k) s->atoms.push_back(std::to_string(k));
      break;
    case GenExpr::Kind::Named: {
      auto it = cx.model.assignments.find(g.name().text());
      if (it == cx.model.assignments.end())
        throw InterpretationError("generator '" + g.name().text() + "' has no carrier in the model");
      s->carrier = g.name().text();
      s->atoms = it->second.objects;
      break;
    }
    case GenExpr::Kind::Product: {
      s->kind = Sem::Kind::Product;
      s->left = build(g.left(), cx);
      s->right = build(g.right(), cx);
      if (s->left->n != 0 && s->right->n > kMaxCarrier / s->left->n)
        throw TooLarge(render(g) + " has more than 2^22 objects");
      s->n = s->left->n * s->right->n;
      return s;
    }
    case GenExpr::Kind::Powerset: {
      s->kind = Sem::Kind::Powerset;
      s->base = build(g.base(), cx);
      if (s->base->n > kMaxPowersetBase)
        throw TooLarge(render(g) + " would have 2^" + std::to_string(s->base->n) + " objects");
      s->drops_empty = cx.model.corrupt_powerset;
      s->n = (std::size_t{1} << s->base->n) - (s->drops_empty ? 1 : 0);
      return s;
    }
  }
  s->n = s->atoms.size();
  return s;
}

std::optional<std::vector<bool>> family_stream(const FamilySpec& fam, std::uint64_t upto);

std::optional<std::size_t> index_of(const ObjLit& o, const Sem& s) {
  switch (s.kind) {
    case Sem::Kind::Atoms: {
      if (o.kind() != ObjLit::Kind::Atom || o.carrier() != s.carrier) return std::nullopt;
      auto it = std::find(s.atoms.begin(), s.atoms.end(), o.tag());
      if (it == s.atoms.end()) return std::nullopt;
      return static_cast<std::size_t>(it - s.atoms.begin());
    }
    case Sem::Kind::Product: {
      if (o.kind() != ObjLit::Kind::Pair) return std::nullopt;
      auto l = index_of(o.first(), *s.left);
      auto r = index_of(o.second(), *s.right);
      if (!l || !r) return std::nullopt;
      return *l * s.right->n + *r;
    }
    case Sem::Kind::Powerset: {
      // Only limits of families denote objects of P[Nat].
      if (o.kind() != ObjLit::Kind::Limit || s.base->carrier != "nat" ||
          s.base->kind != Sem::Kind::Atoms)
        return std::nullopt;
      auto bits = family_stream(o.family(), s.base->n - 1);
      if (!bits) return std::nullopt;
      std::uint64_t m = 0;
      for (std::size_t i = 0; i < s.base->n; ++i)
        if ((*bits)[i]) m |= std::uint64_t{1} << i;
      return s.index_of_mask(m);
    }
  }
  return std::nullopt;
}

// The union of a family on [0, upto], or nullopt when the family is not
// coherent over the stages inspected. Stages are compared directly here
// rather than through the coherence checker the kernel uses.
std::optional<std::vector<bool>> family_stream(const FamilySpec& fam, std::uint64_t upto) {
  if (!fam.stream) return std::nullopt;
  std::uint64_t stages = std::max<std::uint64_t>(kFamilyStages, upto + 1);
  if (fam.flip) stages = std::max<std::uint64_t>(stages, fam.flip->first + 2);
  std::vector<bool> prev;
  std::vector<bool> out;
  try {
    for (std::uint64_t n = 0; n < stages; ++n) {
      auto stage = limits::member_at(fam, n).bits;
      for (std::size_t i = 0; i < prev.size(); ++i)
        if (prev[i] != stage[i]) return std::nullopt;
      if (n <= upto) out.push_back(stage[n]);
      prev = std::move(stage);
    }
  } catch (const limits::StreamSpecError&) {
    return std::nullopt;
  }
  return out;
}

// A function interpreted over its natural domain and codomain.
struct Fn {
  SemPtr dom, cod;
  GenExpr dom_expr = GenExpr::two();
  GenExpr cod_expr = GenExpr::two();
  std::vector<std::optional<std::size_t>> image;
  std::vector<std::string> problems;
};

// Identity of objects as the catalog equality sees it: tags on atoms,
// componentwise on pairs, and on powersets the empty detector applied to the
// symmetric difference.
bool catalog_same(const Sem& s, std::size_t a, std::size_t b) {
  switch (s.kind) {
    case Sem::Kind::Atoms: return a == b;
    case Sem::Kind::Product:
      return catalog_same(*s.left, a / s.right->n, b / s.right->n) &&
             catalog_same(*s.right, a % s.right->n, b % s.right->n);
    case Sem::Kind::Powerset: return (s.mask(a) ^ s.mask(b)) == 0;
  }
  return false;
}

template <class T>
const T& builtin_arg(const FnExpr& f, std::size_t i) {
  if (i >= f.args().size() || !std::holds_alternative<T>(f.args()[i]))
    throw InterpretationError(std::string("malformed arguments to ") + builtin_name(f.builtin_id()));
  return std::get<T>(f.args()[i]);
}

limits::BitStream stream_arg(const FnExpr& f, std::size_t i) {
  try {
    return limits::BitStream::parse(builtin_arg<StreamArg>(f, i).spec);
  } catch (const limits::StreamSpecError& e) {
    throw InterpretationError(e.what());
  }
}

Fn build_fn(const FnExpr& f, Ctx& cx) {
  Fn out;
  auto fill = [&](const std::function<std::size_t(std::size_t)>& v) {
    out.image.resize(out.dom->n);
    for (std::size_t i = 0; i < out.dom->n; ++i) out.image[i] = v(i);
  };
  switch (f.kind()) {
    case FnExpr::Kind::Ref:
      throw InterpretationError("morphism '" + f.ref_name().text() + "' is unresolved");
    case FnExpr::Kind::Table: {
      out.dom_expr = f.domain();
      out.cod_expr = f.codomain();
      out.dom = build(f.domain(), cx);
      out.cod = build(f.codomain(), cx);
      out.image.assign(out.dom->n, std::nullopt);
      for (const auto& [x, y] : f.rows()) {
        auto xi = index_of(x, *out.dom);
        auto yi = index_of(y, *out.cod);
        if (!xi) {
          out.problems.push_back(render(x) + " is not an object of " + render(f.domain()));
          continue;
        }
        if (!yi) {
          out.problems.push_back(render(y) + " is not an object of " + render(f.codomain()));
          continue;
        }
        if (out.image[*xi] && *out.image[*xi] != *yi)
          out.problems.push_back("two rows for " + render(x));
        out.image[*xi] = yi;
      }
      return out;
    }
    case FnExpr::Kind::Builtin: break;
  }
  out.cod_expr = GenExpr::two();
  out.cod = build(GenExpr::two(), cx);
  switch (f.builtin_id()) {
    case BuiltinId::EqOf: {
      const auto& a = builtin_arg<GenExpr>(f, 0);
      out.dom_expr = GenExpr::product(a, a);
      out.dom = build(out.dom_expr, cx);
      const Sem& s = *out.dom->left;
      fill([&](std::size_t i) { return catalog_same(s, i / s.n, i % s.n) ? kYes : kNo; });
      break;
    }
    case BuiltinId::EmptyDetectorOf: {
      const auto& a = builtin_arg<GenExpr>(f, 0);
      out.dom_expr = GenExpr::powerset(a);
      out.dom = build(out.dom_expr, cx);
      const Sem& p = *out.dom;
      fill([&](std::size_t i) { return p.mask(i) == 0 ? kYes : kNo; });
      break;
    }
    case BuiltinId::IndicatorStream: {
      auto s = stream_arg(f, 0);
      out.dom_expr = GenExpr::nat();
      out.dom = build(out.dom_expr, cx);
      fill([&](std::size_t i) { return s.value_at(i) ? kYes : kNo; });
      break;
    }
    case BuiltinId::Restrict: {
      auto s = stream_arg(f, 0);
      auto upper = builtin_arg<std::uint64_t>(f, 1);
      out.dom_expr = GenExpr::nat();
      out.dom = build(out.dom_expr, cx);
      fill([&](std::size_t i) { return i <= upper && s.value_at(i) ? kYes : kNo; });
      break;
    }
    case BuiltinId::UnionOfFamily: {
      const auto& fam = builtin_arg<FamilySpec>(f, 0);
      out.dom_expr = GenExpr::nat();
      out.dom = build(out.dom_expr, cx);
      auto bits = family_stream(fam, out.dom->n - 1);
      if (!bits) {
        out.problems.push_back("family '" + fam.name.text() + "' has no coherent union");
        out.image.assign(out.dom->n, std::nullopt);
        break;
      }
      fill([&](std::size_t i) { return (*bits)[i] ? kYes : kNo; });
      break;
    }
  }
  return out;
}

Verdict holds(const Ctx& cx) {
  Verdict v;
  v.truncated = cx.truncated;
  if (cx.truncated) v.note = "Nat truncated at " + std::to_string(cx.model.nat_bound);
  return v;
}

Verdict fails(const Ctx& cx, Witness w) {
  Verdict v = holds(cx);
  v.status = Status::Fails;
  w["model"] = cx.model.describe();
  v.witness = std::move(w);
  return v;
}

Verdict not_checkable(std::string why) {
  Verdict v;
  v.status = Status::NotFinitelyCheckable;
  v.note = std::move(why);
  return v;
}

// IsMor(f, dom, cod), with the function read over its own declaration.
Verdict check_mor(const FnExpr& f, const GenExpr& dom, const GenExpr& cod, Ctx& cx) {
  Fn fn = build_fn(f, cx);
  if (!(fn.dom_expr == dom) || !(fn.cod_expr == cod))
    return fails(cx, {{"reason", "function is " + render(fn.dom_expr) + " -> " +
                                     render(fn.cod_expr) + ", claimed " + render(dom) + " -> " +
                                     render(cod)}});
  if (!fn.problems.empty()) return fails(cx, {{"reason", fn.problems.front()}});
  for (std::size_t i = 0; i < fn.image.size(); ++i)
    if (!fn.image[i]) return fails(cx, {{"reason", "no image"}, {"object", fn.dom->tag(i)}});
  return holds(cx);
}

// The law a detector on P[A] must satisfy: it flags exactly one table, and
// that table is always-no.
bool detector_law(const Sem& p, const std::function<bool(std::size_t)>& flags) {
  std::size_t flagged = 0;
  for (std::size_t t = 0; t < p.n; ++t) {
    if (!flags(t)) continue;
    if (p.mask(t) != 0 || ++flagged > 1) return false;
  }
  return flagged == 1;
}

Verdict check_squant(const GenExpr& g, Ctx& cx) {
  if (mentions_nat(g))
    return not_checkable("quantification over Nat is unbounded; a truncated check would overclaim");
  SemPtr p = build(GenExpr::powerset(g), cx);
  std::size_t n = p->base->n;
  bool found = false;
  if (n <= kDetectorSearchMax) {
    // Every binary function on P[A] is a candidate detector.
    std::uint64_t candidates = std::uint64_t{1} << p->n;
    for (std::uint64_t d = 0; d < candidates && !found; ++d)
      found = detector_law(*p, [&](std::size_t t) { return (d >> t) & 1; });
  } else {
    found = detector_law(*p, [&](std::size_t t) { return p->mask(t) == 0; });
  }
  if (found) return holds(cx);
  return fails(cx, {{"reason", "no binary function on " + render(GenExpr::powerset(g)) +
                                   " flags exactly the always-no table"},
                    {"tables", std::to_string(p->n)}});
}

Verdict check_domain(const GenExpr& g, const FnExpr& eq, Ctx& cx) {
  SemPtr a = build(g, cx);
  if (a->n != 0 && a->n > kMaxPairs / a->n)
    throw TooLarge(render(g) + " has too many pairs to compare");
  Verdict mor = check_mor(eq, GenExpr::product(g, g), GenExpr::two(), cx);
  if (mor.status != Status::Holds) return mor;
  Fn fn = build_fn(eq, cx);
  for (std::size_t x = 0; x < a->n; ++x)
    for (std::size_t y = 0; y < a->n; ++y) {
      bool yes = *fn.image[x * a->n + y] == kYes;
      if (yes != (x == y))
        return fails(cx, {{"pair", "(" + a->tag(x) + "," + a->tag(y) + ")"},
                          {"value", yes ? "yes" : "no"}});
    }
  return holds(cx);
}

Verdict check_section(const FnExpr& f, const GenExpr& dom, const GenExpr& cod, Ctx& cx) {
  Verdict mor = check_mor(f, dom, cod, cx);
  if (mor.status != Status::Holds) return mor;
  FnTable t = interpret(f, cx.model);
  std::vector<bool> hit(t.codomain.objects.size());
  for (const auto& y : t.image) hit[*y] = true;
  for (std::size_t c = 0; c < hit.size(); ++c)
    if (!hit[c]) return fails(cx, {{"reason", "not surjective"}, {"uncovered", t.codomain.objects[c]}});
  if (!find_section(t)) return fails(cx, {{"reason", "no section"}});
  return holds(cx);
}

Verdict check_coherent(const FamilySpec& fam, Ctx& cx) {
  if (!fam.stream) throw InterpretationError("family '" + fam.name.text() + "' is unresolved");
  if (!family_stream(fam, 0)) {
    Verdict v = fails(cx, {{"family", render(fam)}});
    return v;
  }
  Verdict v = holds(cx);
  v.truncated = true;
  std::uint64_t stages = kFamilyStages;
  if (fam.flip) stages = std::max<std::uint64_t>(stages, fam.flip->first + 2);
  v.note = "stages 0.." + std::to_string(stages - 1) + " compared";
  return v;
}

Verdict check(const Judgment& j, Ctx& cx) {
  return std::visit(
      [&](const auto& x) -> Verdict {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, IsGen>) {
          build(x.gen, cx);
          return holds(cx);
        } else if constexpr (std::is_same_v<T, IsObj>) {
          SemPtr s = build(x.gen, cx);
          if (index_of(x.obj, *s)) return holds(cx);
          return fails(cx, {{"object", render(x.obj)}, {"reason", "does not denote an object"}});
        } else if constexpr (std::is_same_v<T, IsMor>) {
          return check_mor(x.fn, x.dom, x.cod, cx);
        } else if constexpr (std::is_same_v<T, IsBinFn>) {
          return check_mor(x.fn, x.dom, GenExpr::two(), cx);
        } else if constexpr (std::is_same_v<T, IsDomain>) {
          return check_domain(x.gen, x.eq, cx);
        } else if constexpr (std::is_same_v<T, SupportsQuant>) {
          return check_squant(x.gen, cx);
        } else if constexpr (std::is_same_v<T, IsSet>) {
          if (mentions_nat(x.gen))
            return not_checkable(
                "quantification over Nat is unbounded; a truncated check would overclaim");
          Verdict d = check_domain(x.gen, FnExpr::builtin(BuiltinId::EqOf, {x.gen}), cx);
          if (d.status != Status::Holds) return d;
          return check_squant(x.gen, cx);
        } else if constexpr (std::is_same_v<T, IsCoherentFamily>) {
          return check_coherent(x.family, cx);
        } else if constexpr (std::is_same_v<T, IsEq>) {
          if (!x.gen) return not_checkable("equality without a domain is not interpretable");
          SemPtr s = build(*x.gen, cx);
          auto a = index_of(x.lhs, *s);
          auto b = index_of(x.rhs, *s);
          if (!a || !b)
            return fails(cx, {{"reason", "operand outside " + render(*x.gen)}});
          if (*a != *b)
            return fails(cx, {{"lhs", s->tag(*a)}, {"rhs", s->tag(*b)}});
          return holds(cx);
        } else {
          static_assert(std::is_same_v<T, HasSection>);
          return check_section(x.fn, x.dom, x.cod, cx);
        }
      },
      j);
}

Carrier to_carrier(const Sem& s, const std::string& name) {
  Carrier c;
  c.name = name;
  c.objects.reserve(s.n);
  for (std::size_t i = 0; i < s.n; ++i) c.objects.push_back(s.tag(i));
  return c;
}

std::vector<std::string> tags(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back("x" + std::to_string(i));
  return out;
}

}  // namespace

std::string Model::describe() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [name, c] : assignments) {
    os << (first ? "" : ", ") << name << "={";
    for (std::size_t i = 0; i < c.objects.size(); ++i) os << (i ? "," : "") << c.objects[i];
    os << "}";
    first = false;
  }
  os << (first ? "" : "; ") << "Nat={0.." << nat_bound << "}";
  if (corrupt_powerset) os << "; corrupt powersets";
  return os.str();
}

Carrier interpret(const GenExpr& g, const Model& m) {
  Ctx cx{m};
  return to_carrier(*build(g, cx), render(g));
}

std::optional<std::size_t> object_index(const ObjLit& o, const GenExpr& g, const Model& m) {
  Ctx cx{m};
  return index_of(o, *build(g, cx));
}

FnTable interpret(const FnExpr& f, const Model& m) {
  Ctx cx{m};
  Fn fn = build_fn(f, cx);
  if (!fn.problems.empty()) throw InterpretationError(fn.problems.front());
  return {to_carrier(*fn.dom, render(fn.dom_expr)), to_carrier(*fn.cod, render(fn.cod_expr)),
          fn.image};
}

Verdict verify_judgment(const Judgment& j, const Model& m) {
  Ctx cx{m};
  try {
    return check(j, cx);
  } catch (const TooLarge& e) {
    return not_checkable(e.what());
  }
}

std::optional<std::vector<std::size_t>> find_section(const FnTable& f) {
  std::size_t nd = f.domain.objects.size();
  std::size_t nc = f.codomain.objects.size();
  for (const auto& y : f.image)
    if (!y) return std::nullopt;
  if (nc == 0) return std::vector<std::size_t>{};
  if (nd == 0) return std::nullopt;
  // Odometer over all functions cod -> dom, first candidate first.
  std::vector<std::size_t> s(nc, 0);
  while (true) {
    bool ok = true;
    for (std::size_t c = 0; c < nc && ok; ++c) ok = *f.image[s[c]] == c;
    if (ok) return s;
    std::size_t k = nc;
    while (k > 0 && ++s[k - 1] == nd) s[--k] = 0;
    if (k == 0) return std::nullopt;
  }
}

std::vector<Model> canonical_models(const Judgment& j, const Signature& sig,
                                    std::uint64_t max_size) {
  Model fixed;
  std::vector<std::string> free;
  for (const Ident& n : free_names(j)) {
    auto it = sig.find(n.text());
    if (it != sig.end() && it->second.objects)
      fixed.assignments[n.text()] = Carrier{n.text(), *it->second.objects};
    else
      free.push_back(n.text());
  }
  bool nat = mentions_nat(j);
  // Numerals in the judgment must denote, so Nat starts above the largest.
  std::uint64_t nat_lo = 1;
  static const std::regex numeral(R"(\bnat\.(\d+))");
  std::string text = render(j);
  for (std::sregex_iterator it(text.begin(), text.end(), numeral), end; it != end; ++it)
    nat_lo = std::max<std::uint64_t>(nat_lo, std::stoull((*it)[1]) + 1);
  std::uint64_t nat_hi = std::max(max_size, nat_lo);
  // Variable sizes: Nat first (sizes nat_lo..), then free names (0..max).
  std::size_t vars = free.size() + (nat ? 1 : 0);
  std::vector<std::vector<std::uint64_t>> combos;
  std::vector<std::uint64_t> cur(vars);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == vars) {
      combos.push_back(cur);
      return;
    }
    bool is_nat = nat && i == 0;
    std::uint64_t lo = is_nat ? nat_lo : 0;
    std::uint64_t hi = is_nat ? nat_hi : max_size;
    for (std::uint64_t s = lo; s <= hi; ++s) {
      cur[i] = s;
      rec(i + 1);
    }
  };
  rec(0);
  std::stable_sort(combos.begin(), combos.end(), [](const auto& a, const auto& b) {
    std::uint64_t sa = 0, sb = 0;
    for (auto x : a) sa += x;
    for (auto x : b) sb += x;
    return sa < sb;
  });
  std::vector<Model> out;
  for (const auto& c : combos) {
    Model m = fixed;
    std::size_t i = 0;
    if (nat) m.nat_bound = c[i++] - 1;
    for (const auto& name : free) m.assignments[name] = Carrier{name, tags(c[i++])};
    out.push_back(std::move(m));
  }
  return out;
}

namespace {

SweepItem sweep_one(const Theorem& thm, const Signature& sig, std::uint64_t max_size) {
  SweepItem item;
  item.judgment = render(thm.judgment());
  item.status = Status::NotFinitelyCheckable;
  for (const Model& m : canonical_models(thm.judgment(), sig, max_size)) {
    Verdict v;
    try {
      v = verify_judgment(thm.judgment(), m);
    } catch (const InterpretationError& e) {
      v.status = Status::Fails;
      v.witness = Witness{{"model", m.describe()}, {"reason", e.what()}};
    }
    if (v.status == Status::NotFinitelyCheckable) {
      if (item.note.empty()) item.note = v.note;
      if (mentions_nat(thm.judgment()))
        item.truncated_at = std::max(item.truncated_at.value_or(0), m.nat_bound);
      continue;
    }
    ++item.models_checked;
    if (v.truncated)
      item.truncated_at = std::max(item.truncated_at.value_or(0), m.nat_bound);
    if (v.status == Status::Fails) {
      item.status = Status::Fails;
      item.witness = v.witness;
      return item;
    }
    item.status = Status::Holds;
    if (!v.note.empty() && !v.truncated) item.note = v.note;
  }
  if (item.status == Status::Holds && item.truncated_at) item.note.clear();
  return item;
}

}  // namespace

SweepReport soundness_sweep(const std::vector<Theorem>& theorems, const Signature& sig,
                            std::uint64_t max_size) {
  if (max_size > 4) throw BoundError("soundness sweeps are limited to carriers of size <= 4");
  std::vector<std::future<SweepItem>> jobs;
  jobs.reserve(theorems.size());
  for (const Theorem& t : theorems)
    jobs.push_back(std::async(std::launch::async, sweep_one, std::cref(t), std::cref(sig), max_size));
  SweepReport r;
  for (auto& job : jobs) {
    r.items.push_back(job.get());
    switch (r.items.back().status) {
      case Status::Holds: ++r.holds; break;
      case Status::Fails: ++r.fails; break;
      case Status::NotFinitelyCheckable: ++r.not_checkable; break;
    }
  }
  return r;
}

std::vector<ReportItem> SweepReport::report_items() const {
  std::vector<ReportItem> out;
  for (const auto& it : items) {
    ReportItem r;
    r.name = "sound " + it.judgment;
    switch (it.status) {
      case Status::Holds: r.status = ItemStatus::Pass; break;
      case Status::Fails: r.status = ItemStatus::Fail; break;
      case Status::NotFinitelyCheckable: r.status = ItemStatus::Skipped; break;
    }
    if (it.status == Status::NotFinitelyCheckable) {
      r.detail = "not finitely checkable: " + it.note;
      if (it.truncated_at) r.detail += " (Nat truncated at " + std::to_string(*it.truncated_at) + ")";
    } else {
      r.detail = std::to_string(it.models_checked) + " model(s)";
      if (it.truncated_at) r.detail += ", Nat truncated at " + std::to_string(*it.truncated_at);
      if (!it.note.empty()) r.detail += ", " + it.note;
    }
    r.witness = it.witness;
    out.push_back(std::move(r));
  }
  return out;
}

Model default_model() {
  Model m;
  for (std::size_t n = 1; n <= 4; ++n) {
    std::string name = "C" + std::to_string(n);
    m.assignments[name] = Carrier{name, tags(n)};
  }
  return m;
}

std::vector<ReportItem> verify_axiom_instances(const Model& m) {
  std::vector<ReportItem> out;
  auto item = [&](const std::string& name, const Verdict& v, const std::string& ok) {
    ReportItem r{name, v.status == Status::Holds ? ItemStatus::Pass : ItemStatus::Fail, ok, {}};
    if (v.status == Status::Fails) {
      r.detail = "fails";
      r.witness = v.witness;
    }
    out.push_back(std::move(r));
  };

  // H1: Two has exactly two objects and its diagonal is an equality pairing.
  // Quantification over Two is a powerset fact and is exercised under H4.
  {
    Verdict v = verify_judgment(IsDomain{GenExpr::two(), FnExpr::builtin(BuiltinId::EqOf, {GenExpr::two()})}, m);
    if (v.status == Status::Holds && interpret(GenExpr::two(), m).objects.size() != 2)
      v = Verdict{Status::Fails, {{"reason", "Two does not have two objects"}}, false, ""};
    item("H1 Set(Two)", v, "Two has 2 objects and a diagonal equality");
  }

  // H2: every surjection between small carriers has a section.
  {
    std::vector<GenExpr> gens{GenExpr::two()};
    for (const auto& [name, c] : m.assignments)
      if (c.objects.size() <= 4) gens.push_back(GenExpr::named(Ident(name)));
    std::uint64_t surjections = 0;
    Verdict v;
    for (const auto& d : gens) {
      auto dc = interpret(d, m);
      for (const auto& c : gens) {
        auto cc = interpret(c, m);
        std::size_t nd = dc.objects.size(), nc = cc.objects.size();
        if (nc == 0 && nd > 0) continue;
        std::vector<std::size_t> f(nd, 0);
        while (v.status == Status::Holds) {
          std::vector<bool> hit(nc);
          for (auto y : f) hit[y] = true;
          if (std::all_of(hit.begin(), hit.end(), [](bool b) { return b; })) {
            ++surjections;
            FnTable t{dc, cc, {}};
            for (auto y : f) t.image.push_back(y);
            if (!find_section(t)) {
              std::string table;
              for (std::size_t i = 0; i < nd; ++i)
                table += (i ? "," : "") + dc.objects[i] + "->" + cc.objects[f[i]];
              v = Verdict{Status::Fails, {{"map", table}, {"model", m.describe()}}, false, ""};
            }
          }
          std::size_t k = nd;
          while (k > 0 && ++f[k - 1] == nc) f[--k] = 0;
          if (k == 0) break;
        }
      }
    }
    item("H2 choice (section form)", v,
         std::to_string(surjections) + " surjection(s) between carriers of size <= 4 have sections");
  }

  out.push_back({"H3 SupportsQuant(Nat)", ItemStatus::Assumed,
                 "not finitely checkable; Nat truncated at " + std::to_string(m.nat_bound),
                 std::nullopt});

  // H4: each small carrier's powerset supports quantification.
  {
    std::vector<GenExpr> gens{GenExpr::two()};
    for (const auto& [name, c] : m.assignments)
      if (c.objects.size() <= 4) gens.push_back(GenExpr::named(Ident(name)));
    Verdict v;
    std::size_t checked = 0;
    for (const auto& g : gens) {
      ++checked;
      Verdict p = verify_judgment(SupportsQuant{GenExpr::powerset(g)}, m);
      if (p.status != Status::Holds) {
        v = p;
        v.status = Status::Fails;
        v.witness["generator"] = render(g);
        break;
      }
    }
    item("H4 powerset closure", v,
         "SupportsQuant(P[A]) for " + std::to_string(checked) + " generator(s) A");
  }
  return out;
}

}  // namespace ogk::semantics
