#include "pathcat/fincat.hpp"

#include <algorithm>

namespace pathcat {

std::string_view errc_name(Errc c) {
  switch (c) {
    case Errc::NotComposable: return "NotComposable";
    case Errc::MissingEntry: return "MissingEntry";
    case Errc::NoTerminal: return "NoTerminal";
    case Errc::NoPullback: return "NoPullback";
    case Errc::MissingPullback: return "MissingPullback";
    case Errc::MissingSlicePathObject: return "MissingSlicePathObject";
    case Errc::NoFiller: return "NoFiller";
    case Errc::CongruenceFailure: return "CongruenceFailure";
    case Errc::ResourceCap: return "ResourceCap";
    case Errc::NotHomotopical: return "NotHomotopical";
    case Errc::NaturalityFailure: return "NaturalityFailure";
    case Errc::NotIsofibration: return "NotIsofibration";
    case Errc::NotWeakEquivalence: return "NotWeakEquivalence";
    case Errc::MissingPiType: return "MissingPiType";
    case Errc::NoSuitablePf: return "NoSuitablePf";
    case Errc::ParseError: return "ParseError";
    case Errc::SchemaError: return "SchemaError";
    case Errc::Precondition: return "Precondition";
  }
  return "Unknown";
}

json ValidationReport::to_json() const {
  json out = json::array();
  for (const auto& v : violations) out.push_back({{"rule", v.rule}, {"witness", v.witness}});
  return out;
}

std::vector<MorId> FinCategory::lifts(MorId k, MorId p) {
  std::vector<MorId> out;
  for (MorId l : hom(dom(k), dom(p)))
    if (compose(p, l) == k) out.push_back(l);
  return out;
}

std::optional<MorId> FinCategory::first_lift(MorId k, MorId p) {
  for (MorId l : hom(dom(k), dom(p)))
    if (compose(p, l) == k) return l;
  return std::nullopt;
}

MorId FinCategory::to_terminal(ObjId x) {
  auto h = hom(x, terminal());
  if (h.size() != 1) throw Error(Errc::NoTerminal, "object has no unique map to the terminal");
  return h.front();
}

std::string FinCategory::object_label(ObjId x) const { return std::to_string(idx(x)); }

const PullbackData& FinCategory::product(ObjId a, ObjId b) {
  return pullback(to_terminal(a), to_terminal(b));
}

MorId FinCategory::pair(ObjId a, ObjId b, MorId fa, MorId fb) {
  return mediator(product(a, b), fa, fb);
}

MorId FinCategory::product_map(MorId a, MorId b) {
  const PullbackData src = product(dom(a), dom(b));
  return pair(cod(a), cod(b), compose(a, src.proj1), compose(b, src.proj2));
}

MorId compose_morphisms(FinCategory& c, MorId g, MorId f) { return c.compose(g, f); }

MorId compose_all(FinCategory& c, std::initializer_list<MorId> chain) {
  // chain is written left to right as in g . f . e
  auto it = std::rbegin(chain);
  MorId acc = *it++;
  for (; it != std::rend(chain); ++it) acc = c.compose(*it, acc);
  return acc;
}

std::vector<MorId> hom_set(FinCategory& c, ObjId x, ObjId y) { return c.hom(x, y); }
ObjId find_terminal(FinCategory& c) { return c.terminal(); }
const PullbackData& find_pullback(FinCategory& c, MorId f, MorId g) { return c.pullback(f, g); }

namespace {
std::uint64_t pair_key(MorId g, MorId f) {
  return (static_cast<std::uint64_t>(idx(g)) << 32) | idx(f);
}
}  // namespace

TableCategory::TableCategory(std::size_t objects, std::vector<Morphism> morphisms,
                             std::vector<MorId> identities,
                             const std::vector<CompEntry>& comp)
    : n_objects_(objects), mors_(std::move(morphisms)), ids_(std::move(identities)) {
  if (ids_.size() != n_objects_)
    throw Error(Errc::SchemaError, "identity assignment must cover every object");
  for (const auto& m : mors_)
    if (idx(m.dom) >= n_objects_ || idx(m.cod) >= n_objects_)
      throw Error(Errc::SchemaError, "morphism endpoint out of range");
  for (MorId i : ids_) check_mor(i);
  for (const auto& [g, f, gf] : comp) {
    check_mor(g);
    check_mor(f);
    check_mor(gf);
    if (!comp_.emplace(pair_key(g, f), gf).second)
      throw Error(Errc::SchemaError, "duplicate composition entry",
                  json::array({idx(g), idx(f)}));
  }
  homs_.resize(n_objects_ * n_objects_);
  for (std::uint32_t m = 0; m < mors_.size(); ++m)
    homs_[idx(mors_[m].dom) * n_objects_ + idx(mors_[m].cod)].push_back(mor_id(m));
}

void TableCategory::check_mor(MorId m) const {
  if (idx(m) >= mors_.size()) throw Error(Errc::SchemaError, "morphism id out of range", idx(m));
}

ObjId TableCategory::dom(MorId m) const {
  check_mor(m);
  return mors_[idx(m)].dom;
}

ObjId TableCategory::cod(MorId m) const {
  check_mor(m);
  return mors_[idx(m)].cod;
}

MorId TableCategory::identity(ObjId x) const { return ids_.at(idx(x)); }

std::optional<MorId> TableCategory::lookup(MorId g, MorId f) const {
  auto it = comp_.find(pair_key(g, f));
  if (it == comp_.end()) return std::nullopt;
  return it->second;
}

MorId TableCategory::compose(MorId g, MorId f) {
  if (cod(f) != dom(g))
    throw Error(Errc::NotComposable, "codomain/domain mismatch", json::array({idx(g), idx(f)}));
  auto r = lookup(g, f);
  if (!r) throw Error(Errc::MissingEntry, "composition table entry missing", json::array({idx(g), idx(f)}));
  return *r;
}

std::vector<TableCategory::CompEntry> TableCategory::comp_entries() const {
  std::vector<CompEntry> out;
  out.reserve(comp_.size());
  for (const auto& [k, v] : comp_)
    out.push_back({mor_id(static_cast<std::uint32_t>(k >> 32)),
                   mor_id(static_cast<std::uint32_t>(k & 0xffffffffu)), v});
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<MorId> TableCategory::hom(ObjId x, ObjId y) {
  return homs_.at(idx(x) * n_objects_ + idx(y));
}

ObjId TableCategory::terminal() {
  if (!terminal_searched_) {
    terminal_searched_ = true;
    for (std::uint32_t t = 0; t < n_objects_ && !terminal_; ++t) {
      bool ok = true;
      for (std::uint32_t x = 0; x < n_objects_ && ok; ++x)
        ok = hom(obj_id(x), obj_id(t)).size() == 1;
      if (ok) terminal_ = obj_id(t);
    }
  }
  if (!terminal_) throw Error(Errc::NoTerminal, "no object receives exactly one map from every object");
  return *terminal_;
}

const PullbackData& TableCategory::pullback(MorId f, MorId g) {
  auto key = std::make_pair(f, g);
  if (auto it = pullbacks_.find(key); it != pullbacks_.end()) return it->second;
  auto& med = mediators_[key];
  auto pb = search_pullback(*this, f, g, &med);
  if (!pb) {
    mediators_.erase(key);
    throw Error(Errc::NoPullback, "no apex satisfies the universal property",
                json::array({idx(f), idx(g)}));
  }
  return pullbacks_.emplace(key, *pb).first->second;
}

MorId TableCategory::mediator(const PullbackData& pb, MorId a, MorId b) {
  pullback(pb.f, pb.g);
  auto& med = mediators_.at({pb.f, pb.g});
  auto it = med.find({a, b});
  if (it == med.end())
    throw Error(Errc::Precondition, "cone does not commute over the cospan",
                json::array({idx(a), idx(b)}));
  return it->second;
}

std::optional<PullbackData> search_pullback(FinCategory& c, MorId f, MorId g,
                                            std::map<std::pair<MorId, MorId>, MorId>* mediators) {
  if (c.cod(f) != c.cod(g))
    throw Error(Errc::Precondition, "pullback of maps with different codomains");
  const ObjId a = c.dom(f), b = c.dom(g);
  const auto n = static_cast<std::uint32_t>(c.object_count());
  std::map<std::pair<MorId, MorId>, MorId> med;
  for (std::uint32_t pi = 0; pi < n; ++pi) {
    const ObjId p = obj_id(pi);
    for (MorId p1 : c.hom(p, a)) {
      for (MorId p2 : c.hom(p, b)) {
        if (c.compose(f, p1) != c.compose(g, p2)) continue;
        med.clear();
        bool universal = true;
        for (std::uint32_t ti = 0; ti < n && universal; ++ti) {
          const ObjId t = obj_id(ti);
          const auto ms = c.hom(t, p);
          for (MorId x : c.hom(t, a)) {
            for (MorId y : c.hom(t, b)) {
              if (c.compose(f, x) != c.compose(g, y)) continue;
              int found = 0;
              MorId m{};
              for (MorId cand : ms)
                if (c.compose(p1, cand) == x && c.compose(p2, cand) == y) {
                  ++found;
                  m = cand;
                }
              if (found != 1) {
                universal = false;
                break;
              }
              med.emplace(std::make_pair(x, y), m);
            }
            if (!universal) break;
          }
        }
        if (universal) {
          if (mediators) *mediators = std::move(med);
          return PullbackData{f, g, p, p1, p2};
        }
      }
    }
  }
  return std::nullopt;
}

ValidationReport validate_category(FinCategory& c) {
  std::vector<ObjId> all;
  for (std::uint32_t i = 0; i < c.object_count(); ++i) all.push_back(obj_id(i));
  return validate_category(c, all);
}

ValidationReport validate_category(FinCategory& c, const std::vector<ObjId>& objects) {
  ValidationReport rep;
  auto safe_compose = [&](MorId g, MorId f) -> std::optional<MorId> {
    try {
      return c.compose(g, f);
    } catch (const Error& e) {
      rep.add("composability", {{"g", idx(g)}, {"f", idx(f)}, {"error", e.what()}});
      return std::nullopt;
    }
  };
  for (ObjId x : objects) {
    const MorId ix = c.identity(x);
    if (c.dom(ix) != x || c.cod(ix) != x) rep.add("identity_type", {{"object", idx(x)}});
  }
  for (ObjId x : objects)
    for (ObjId y : objects)
      for (MorId f : c.hom(x, y)) {
        auto l = safe_compose(c.identity(y), f);
        auto r = safe_compose(f, c.identity(x));
        if ((l && *l != f) || (r && *r != f)) rep.add("identity_law", {{"f", idx(f)}});
        for (ObjId z : objects)
          for (MorId g : c.hom(y, z)) {
            auto gf = safe_compose(g, f);
            if (!gf) continue;
            if (c.dom(*gf) != x || c.cod(*gf) != z) {
              rep.add("composite_type", json::array({idx(g), idx(f), idx(*gf)}));
              continue;
            }
            for (ObjId w : objects)
              for (MorId h : c.hom(z, w)) {
                auto hg = safe_compose(h, g);
                if (!hg) continue;
                auto lhs = safe_compose(h, *gf);
                auto rhs = safe_compose(*hg, f);
                if (lhs && rhs && *lhs != *rhs)
                  rep.add("associativity", json::array({idx(h), idx(g), idx(f)}));
              }
          }
      }
  return rep;
}

ValidationReport validate_functor(const FinFunctor& F) {
  ValidationReport rep;
  FinCategory& s = *F.source;
  FinCategory& t = *F.target;
  if (F.obj.size() != s.object_count() || F.mor.size() != s.morphism_count()) {
    rep.add("functor_shape", {{"objects", F.obj.size()}, {"morphisms", F.mor.size()}});
    return rep;
  }
  for (std::uint32_t x = 0; x < s.object_count(); ++x)
    if (F.mor[idx(s.identity(obj_id(x)))] != t.identity(F.obj[x]))
      rep.add("functor_identity", {{"object", x}});
  for (std::uint32_t m = 0; m < s.morphism_count(); ++m) {
    const MorId fm = F.mor[m];
    if (t.dom(fm) != F.obj[idx(s.dom(mor_id(m)))] || t.cod(fm) != F.obj[idx(s.cod(mor_id(m)))])
      rep.add("functor_type", {{"morphism", m}});
  }
  if (!rep.ok()) return rep;
  for (std::uint32_t m = 0; m < s.morphism_count(); ++m) {
    const MorId f = mor_id(m);
    for (std::uint32_t z = 0; z < s.object_count(); ++z)
      for (MorId g : s.hom(s.cod(f), obj_id(z)))
        if (F.mor[idx(s.compose(g, f))] != t.compose(F.mor[idx(g)], F.mor[idx(f)]))
          rep.add("functor_composition", json::array({idx(g), idx(f)}));
  }
  return rep;
}

}  // namespace pathcat
