#include <map>
#include <mutex>

#include "catalog_internal.hpp"
#include "cliffrep/catalog.hpp"
#include "cliffrep/mv_text.hpp"

namespace cliffrep {

namespace {

// Product of host generators named by 1-based indices; positive ones first, negative offset by p.
Multivector ordered_blade(const Signature& s, const std::vector<int>& e, const std::vector<int>& eps) {
    Multivector r = Multivector::scalar(s, 1);
    for (int i : e) r = r * Multivector::generator(s, i);
    for (int j : eps) r = r * Multivector::generator(s, s.p + j);
    return r;
}

std::vector<int> upto(int k, int from = 1) {
    std::vector<int> v;
    for (int i = from; i <= k; ++i) v.push_back(i);
    return v;
}

// e1..e_a, eps1..eps_b of the host, presenting (a,b)
GeneratorList standard_prefix(const Signature& s, int a, int b) {
    std::vector<Multivector> g;
    for (int i = 1; i <= a; ++i) g.push_back(Multivector::generator(s, i));
    for (int j = 1; j <= b; ++j) g.push_back(Multivector::generator(s, s.p + j));
    return GeneratorList::checked(s, std::move(g));
}

bool is_leaf_sig(const Signature& s) { return s.n() <= 2 && !(s.p == 0 && s.q == 2) && !(s.p == 0 && s.q == 1); }

LeafKind leaf_for(const Signature& s) {
    if (s == Signature(0, 0)) return LeafKind::Scalar;
    if (s == Signature(1, 0)) return LeafKind::Hyperbolic;
    if (s == Signature(2, 0)) return LeafKind::Euclid2;
    if (s == Signature(1, 1)) return LeafKind::Split2;
    return LeafKind::None;
}

struct ExplicitRow {
    Signature sig;
    Signature outer;
    LeafKind outer_leaf;
    std::vector<const char*> outer_gens;
    Signature inner;
    std::vector<const char*> inner_gens;  // empty: standard prefix of the host
};

const std::vector<ExplicitRow>& explicit_rows() {
    using L = LeafKind;
    static const std::vector<ExplicitRow> rows = {
        {{3, 0}, {0, 1}, L::ComplexUnit, {"e123"}, {2, 0}, {}},
        {{2, 1}, {1, 0}, L::Hyperbolic, {"e12*eps1"}, {1, 1}, {}},
        {{1, 2}, {0, 1}, L::ComplexUnit, {"e1*eps12"}, {1, 1}, {}},
        {{0, 3}, {1, 0}, L::Hyperbolic, {"eps123"}, {0, 2}, {}},
        {{4, 0}, {0, 2}, L::Quaternion, {"e123", "e124"}, {2, 0}, {}},
        {{3, 1}, {1, 1}, L::Split2, {"e12*eps1", "e123"}, {2, 0}, {}},
        {{2, 2}, {1, 1}, L::Split2, {"e12*eps1", "e1*eps12"}, {1, 1}, {}},
        {{1, 3}, {1, 1}, L::Split2, {"eps123", "e1*eps12"}, {0, 2}, {}},
        {{0, 4}, {2, 0}, L::Euclid2, {"eps123", "eps124"}, {0, 2}, {}},
        {{5, 0}, {1, 0}, L::Hyperbolic, {"e12345"}, {4, 0}, {}},
        {{4, 1}, {0, 1}, L::ComplexUnit, {"e1234*eps1"}, {3, 1}, {}},
        {{3, 2}, {1, 0}, L::Hyperbolic, {"e123*eps12"}, {2, 2}, {}},
        {{2, 3}, {0, 1}, L::ComplexUnit, {"e12*eps123"}, {2, 2}, {}},
        {{1, 4}, {1, 0}, L::Hyperbolic, {"e1*eps1234"}, {1, 3}, {}},
        {{0, 5}, {0, 1}, L::ComplexUnit, {"eps12345"}, {2, 2}, {"eps1234", "eps1235", "eps1", "eps2"}},
        {{6, 0}, {2, 0}, L::Euclid2, {"e12345", "e12346"}, {4, 0}, {}},
        {{5, 1}, {1, 1}, L::Split2, {"e12345", "e1234*eps1"}, {4, 0}, {}},
        {{4, 2}, {1, 1}, L::Split2, {"e123*eps12", "e1234*eps1"}, {3, 1}, {}},
        {{3, 3}, {1, 1}, L::Split2, {"e123*eps12", "e12*eps123"}, {2, 2}, {}},
        {{2, 4}, {1, 1}, L::Split2, {"e1*eps1234", "e12*eps123"}, {1, 3}, {}},
        {{1, 5}, {1, 1}, L::Split2, {"e1*eps1234", "eps12345"}, {0, 4}, {}},
        {{0, 6}, {2, 0}, L::Euclid2, {"eps1236", "eps1235"}, {3, 1}, {"eps124", "eps134", "eps234", "eps12356"}},
        {{7, 0}, {0, 1}, L::ComplexUnit, {"e1234567"}, {4, 2}, {"e1", "e2", "e3", "e4", "e123456", "e123457"}},
        {{0, 7}, {1, 0}, L::Hyperbolic, {"eps1234567"}, {0, 6}, {}},
        {{8, 0}, {2, 0}, L::Euclid2, {"e4567", "e4568"}, {3, 3}, {"e1", "e2", "e3", "e123478", "e123578", "e123678"}},
        {{0, 8}, {2, 0}, L::Euclid2, {"eps1234568", "eps1234567"}, {0, 6}, {}},
    };
    return rows;
}

const ExplicitRow* find_explicit(const Signature& s) {
    for (const auto& r : explicit_rows())
        if (r.sig == s) return &r;
    return nullptr;
}

bool is_diag_member(const Signature& s) { return s.q >= 1 && s.p >= s.q && s.p - s.q <= 6; }

struct DiagPlan {
    Signature outer;
    LeafKind outer_leaf;
    std::vector<Multivector> outer_gens;
    Signature inner;
};

DiagPlan diag_plan(const Signature& s) {
    const int n = s.q, k = s.p - s.q;
    auto E = [&](int a, int b) { return ordered_blade(s, upto(a), upto(b)); };
    switch (k) {
        case 0: return {{1, 1}, LeafKind::Split2, {E(n, n - 1), E(n - 1, n)}, {n - 1, n - 1}};
        case 1: return {{1, 0}, LeafKind::Hyperbolic, {E(n + 1, n)}, {n, n}};
        case 2: return {{1, 1}, LeafKind::Split2, {E(n + 1, n), E(n + 2, n - 1)}, {n + 1, n - 1}};
        case 3: return {{0, 1}, LeafKind::ComplexUnit, {E(n + 3, n)}, {n + 2, n}};
        case 4: return {{1, 1}, LeafKind::Split2, {E(n + 4, n - 1), E(n + 3, n)}, {n + 3, n - 1}};
        case 5: return {{1, 0}, LeafKind::Hyperbolic, {E(n + 5, n)}, {n + 4, n}};
        default: return {{1, 1}, LeafKind::Split2, {E(n + 5, n), E(n + 6, n - 1)}, {n + 5, n - 1}};
    }
}

std::string inner_route_for_diag(const Signature& inner) {
    if (inner.n() == 0) return "explicit";
    if (is_diag_member(inner)) return "diag";
    return "explicit";
}

bool explicit_covered(const Signature& s) {
    return s.n() == 0 || is_leaf_sig(s) || s == Signature(0, 1) || s == Signature(0, 2) || find_explicit(s);
}

bool periodic_applies(const Signature& s) { return s.p >= 8 || (s.p == 0 && s.q >= 9); }

Signature periodic_reduced(const Signature& s) {
    if (s.p >= 8) return {s.p - 8, s.q};
    return {0, s.q - 8};
}

bool covered(const Signature& s) {
    if (s.n() > kMaxGenerators) return false;
    if (explicit_covered(s) || is_diag_member(s)) return true;
    if (periodic_applies(s) && periodic_reduced(s).n() > 0) return covered(periodic_reduced(s));
    return false;
}

SpecPtr build_route(const Signature& s, const std::string& route);

SpecPtr build_explicit_route(const Signature& s) {
    if (s == Signature(0, 1)) return make_leaf(LeafKind::ComplexReal);
    if (s == Signature(0, 2)) return make_leaf(LeafKind::Quaternion);
    if (LeafKind k = leaf_for(s); k != LeafKind::None) return make_leaf(k);
    const ExplicitRow* row = find_explicit(s);
    if (!row) throw CatalogMiss("no explicit construction for " + s.to_string(), default_route(s));
    SpecPtr outer = make_leaf(row->outer_leaf);
    std::vector<Multivector> og;
    for (const char* t : row->outer_gens) og.push_back(parse_multivector(t, s));
    GeneratorList outer_gens = GeneratorList::checked(s, std::move(og));
    GeneratorList inner_gens;
    if (row->inner_gens.empty()) {
        inner_gens = standard_prefix(s, row->inner.p, row->inner.q);
    } else {
        std::vector<Multivector> ig;
        for (const char* t : row->inner_gens) ig.push_back(parse_multivector(t, s));
        inner_gens = GeneratorList::checked(s, std::move(ig));
    }
    SpecPtr inner = lookup_spec(row->inner, classification_route(row->inner));
    return make_tensor(s, "explicit", outer, outer_gens, inner, inner_gens);
}

SpecPtr build_diag_route(const Signature& s) {
    if (!is_diag_member(s)) throw CatalogMiss(s.to_string() + " is not in a diagonal family", default_route(s));
    DiagPlan plan = diag_plan(s);
    GeneratorList outer_gens = GeneratorList::checked(s, plan.outer_gens);
    GeneratorList inner_gens = standard_prefix(s, plan.inner.p, plan.inner.q);
    SpecPtr inner = lookup_spec(plan.inner, inner_route_for_diag(plan.inner));
    return make_tensor(s, "diag", make_leaf(plan.outer_leaf), outer_gens, inner, inner_gens);
}

SpecPtr build_periodic_route(const Signature& s) {
    if (!periodic_applies(s)) throw CatalogMiss(s.to_string() + " has no periodic reduction", default_route(s));
    Signature red = periodic_reduced(s);
    const bool pos = s.p >= 8;
    Signature base = pos ? Signature(8, 0) : Signature(0, 8);
    SpecPtr first = lookup_spec(base, "explicit");
    SpecPtr second = lookup_spec(red, classification_route(red));
    std::vector<Multivector> fg, sg;
    for (int i = 1; i <= 8; ++i) fg.push_back(Multivector::generator(s, pos ? i : s.p + i));
    Multivector vol = Multivector::scalar(s, 1);
    for (const auto& g : fg) vol = vol * g;
    if (pos) {
        for (int i = 9; i <= s.p; ++i) sg.push_back(vol * Multivector::generator(s, i));
        for (int j = 1; j <= s.q; ++j) sg.push_back(vol * Multivector::generator(s, s.p + j));
    } else {
        for (int j = 9; j <= s.q; ++j) sg.push_back(vol * Multivector::generator(s, j));
    }
    return make_tensor(s, "periodic", first, GeneratorList::checked(s, std::move(fg)), second,
                       GeneratorList::checked(s, std::move(sg)));
}

SpecPtr build_route(const Signature& s, const std::string& route) {
    if (s == Signature(0, 1) && route == "real2") return make_leaf(LeafKind::ComplexReal);
    if (s == Signature(0, 1) && route == "complex") return make_leaf(LeafKind::ComplexUnit);
    if (s == Signature(0, 2) && route == "quaternion") return make_leaf(LeafKind::Quaternion);
    if (s == Signature(0, 2) && route == "complex") return make_leaf(LeafKind::QuaternionComplex);
    if (s == Signature(0, 2) && route == "real4") return make_leaf(LeafKind::QuaternionReal);
    if (route == "explicit") return build_explicit_route(s);
    if (route == "diag") return build_diag_route(s);
    if (route == "periodic") return build_periodic_route(s);
    throw CatalogMiss("unknown route '" + route + "' for " + s.to_string(), default_route(s));
}

}  // namespace

std::string nearest_route(const Signature& sig) {
    const int cls = (((sig.q - sig.p) % 8) + 8) % 8;
    const CatalogEntry* best = nullptr;
    static const std::vector<CatalogEntry> entries = catalog_entries();
    for (const auto& e : entries) {
        if (!e.classification || (((e.sig.q - e.sig.p) % 8) + 8) % 8 != cls) continue;
        int d = std::abs(e.sig.n() - sig.n()), bd = best ? std::abs(best->sig.n() - sig.n()) : 1 << 30;
        if (!best || d < bd || (d == bd && e.sig.n() > best->sig.n())) best = &e;
    }
    return best ? best->sig.to_string() + " via " + best->route : std::string();
}

std::vector<std::string> routes_for(const Signature& s) {
    std::vector<std::string> r;
    if (s == Signature(0, 1)) return {"real2", "complex"};
    if (s == Signature(0, 2)) return {"quaternion", "complex", "real4"};
    if (explicit_covered(s)) r.push_back("explicit");
    if (is_diag_member(s)) r.push_back("diag");
    if (periodic_applies(s) && periodic_reduced(s).n() > 0 && covered(periodic_reduced(s))) r.push_back("periodic");
    return r;
}

std::string classification_route(const Signature& s) {
    if (s == Signature(0, 1)) return "complex";
    if (s == Signature(0, 2)) return "quaternion";
    auto r = routes_for(s);
    if (r.empty()) throw CatalogMiss("signature " + s.to_string() + " is not cataloged", "");
    return r.front();
}

std::string default_route(const Signature& s) {
    if (s == Signature(0, 1)) return "real2";
    auto r = routes_for(s);
    return r.empty() ? std::string() : r.front();
}

std::vector<CatalogEntry> catalog_entries() {
    std::vector<CatalogEntry> out;
    auto add = [&](Signature s) {
        for (const auto& r : routes_for(s)) out.push_back({s, r, r == classification_route(s)});
    };
    for (int n = 0; n <= 6; ++n)
        for (int p = n; p >= 0; --p) add(Signature(p, n - p));
    for (Signature s : {Signature(7, 0), Signature(0, 7), Signature(8, 0), Signature(0, 8)}) add(s);
    for (int n = 1; 2 * n <= 10; ++n)
        for (int k = 0; k <= 6 && 2 * n + k <= 10; ++k) {
            Signature s(n + k, n);
            if (s.n() > 6) add(s);
        }
    for (Signature s : {Signature(9, 0), Signature(0, 9)}) add(s);
    // the diag route of a small signature sits next to its explicit one
    for (auto& e : out)
        if (e.route == "diag" && e.sig.n() <= 6) e.classification = false;
    return out;
}

SpecPtr lookup_spec(const Signature& sig, const std::string& route_in) {
    static std::mutex mu;
    static std::map<std::pair<Signature, std::string>, SpecPtr> memo;
    std::string route = route_in.empty() ? default_route(sig) : route_in;
    if (route.empty() || !covered(sig))
        throw CatalogMiss("signature " + sig.to_string() + " is not cataloged", nearest_route(sig));
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = memo.find({sig, route});
        if (it != memo.end()) return it->second;
    }
    auto routes = routes_for(sig);
    if (std::find(routes.begin(), routes.end(), route) == routes.end())
        throw CatalogMiss("route '" + route + "' does not cover " + sig.to_string(), default_route(sig));
    auto named = std::make_shared<RepSpec>(*build_route(sig, route));
    named->route = route;
    SpecPtr built = detail::apply_literals(named);
    std::lock_guard<std::mutex> lock(mu);
    return memo.emplace(std::make_pair(sig, route), built).first->second;
}

SpecPtr build_explicit(const Signature& sig) { return lookup_spec(sig, default_route(sig)); }

namespace detail {

std::optional<DiagInfo> diag_info(const Signature& s) {
    if (!is_diag_member(s)) return std::nullopt;
    DiagPlan plan = diag_plan(s);
    return DiagInfo{s.q, s.p - s.q, plan.outer_gens, plan.inner};
}

}  // namespace detail

}  // namespace cliffrep
