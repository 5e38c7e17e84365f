#include "cliffrep/catalog.hpp"

#include <algorithm>
#include <map>

#include "cliffrep/mv_text.hpp"

namespace cliffrep {

namespace {

MvMatrix mat(const Signature& s, std::initializer_list<std::initializer_list<const char*>> rows) {
    std::vector<std::vector<Multivector>> m;
    for (const auto& r : rows) {
        m.emplace_back();
        for (const char* t : r) m.back().push_back(parse_multivector(t, s));
    }
    return MvMatrix::from_rows(s, m);
}

Ring tensor_ring(Ring a, Ring b) {
    if (a == Ring::Real) return b;
    if (b == Ring::Real) return a;
    if ((a == Ring::DoubledReal && b == Ring::Quaternion) || (a == Ring::Quaternion && b == Ring::DoubledReal))
        return Ring::DoubledQuaternion;
    throw RingMismatch("tensor of " + ring_name(a) + " and " + ring_name(b));
}

RingScalar cx(const Rational& r, const Rational& i) { return RingScalar::complex(r, i); }

RingMatrix leaf_represent(const RepSpec& s, const Multivector& a) {
    auto c = [&](BladeMask m) { return a.coeff(m); };
    switch (s.leaf) {
        case LeafKind::Scalar: {
            RingMatrix r = RingMatrix::zero(Ring::Real, 1);
            r.at(0, 0) = c(0);
            return r;
        }
        case LeafKind::Hyperbolic: {
            RingMatrix plus = RingMatrix::zero(Ring::Real, 1), minus = plus;
            plus.at(0, 0) = c(0) + c(1);
            minus.at(0, 0) = c(0) - c(1);
            return RingMatrix::doubled(plus, minus);
        }
        case LeafKind::ComplexReal: {
            RingMatrix r = RingMatrix::zero(Ring::Real, 2);
            r.at(0, 0) = c(0);
            r.at(0, 1) = -c(1);
            r.at(1, 0) = c(1);
            r.at(1, 1) = c(0);
            return r;
        }
        case LeafKind::ComplexUnit: {
            RingMatrix r = RingMatrix::zero(Ring::Complex, 1);
            r.at(0, 0) = cx(c(0), c(1));
            return r;
        }
        case LeafKind::Euclid2:
        case LeafKind::Split2: {
            Rational sgn = s.leaf == LeafKind::Split2 ? -1 : 1;
            RingMatrix r = RingMatrix::zero(Ring::Real, 2);
            r.at(0, 0) = c(0) + c(1);
            r.at(0, 1) = sgn * (c(2) + c(3));
            r.at(1, 0) = c(2) - c(3);
            r.at(1, 1) = c(0) - c(1);
            return r;
        }
        case LeafKind::Quaternion: {
            RingMatrix r = RingMatrix::zero(Ring::Quaternion, 1);
            r.at(0, 0) = RingScalar::quaternion(c(0), c(1), c(2), c(3));
            return r;
        }
        case LeafKind::QuaternionComplex: {
            RingMatrix r = RingMatrix::zero(Ring::Complex, 2);
            r.at(0, 0) = cx(c(0), c(1));
            r.at(0, 1) = cx(-c(2), -c(3));
            r.at(1, 0) = cx(c(2), -c(3));
            r.at(1, 1) = cx(c(0), -c(1));
            return r;
        }
        case LeafKind::QuaternionReal: {
            const Rational a0 = c(0), a1 = c(1), a2 = c(2), a3 = c(3);
            const Rational rows[4][4] = {
                {a0, -a1, -a2, -a3}, {a1, a0, -a3, a2}, {a2, a3, a0, -a1}, {a3, -a2, a1, a0}};
            RingMatrix r = RingMatrix::zero(Ring::Real, 4);
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j) r.at(i, j) = rows[i][j];
            return r;
        }
        case LeafKind::None: break;
    }
    throw StructureError("not a leaf representation");
}

// Solve host generator i = XOR of abstract generator images, over GF(2).
std::vector<std::pair<BladeMask, BladeMask>> gf2_preimage(const Signature& host,
                                                          const std::vector<BladeMask>& images, int n_first) {
    const int n = host.n();
    if (static_cast<int>(images.size()) != n)
        throw StructureError("generator count " + std::to_string(images.size()) + " does not match host " +
                             host.to_string());
    // rows: image mask | combination of abstract generators (as 64-bit)
    std::vector<std::pair<BladeMask, uint64_t>> rows;
    for (int k = 0; k < n; ++k) rows.push_back({images[k], uint64_t{1} << k});
    std::vector<std::pair<BladeMask, BladeMask>> out(n);
    int r = 0;
    std::vector<int> pivot_row(n, -1);
    for (int bit = 0; bit < n; ++bit) {
        int sel = -1;
        for (int i = r; i < n; ++i)
            if (rows[i].first & (BladeMask{1} << bit)) { sel = i; break; }
        if (sel < 0) throw StructureError("generators do not span the host algebra " + host.to_string());
        std::swap(rows[r], rows[sel]);
        for (int i = 0; i < n; ++i)
            if (i != r && (rows[i].first & (BladeMask{1} << bit))) {
                rows[i].first ^= rows[r].first;
                rows[i].second ^= rows[r].second;
            }
        pivot_row[bit] = r++;
    }
    for (int bit = 0; bit < n; ++bit) {
        uint64_t comb = rows[pivot_row[bit]].second;
        BladeMask f = static_cast<BladeMask>(comb & ((uint64_t{1} << n_first) - 1));
        BladeMask s = static_cast<BladeMask>(comb >> n_first);
        out[bit] = {f, s};
    }
    return out;
}

Twist embed_twist(const Twist& t, const Embedding& emb, const GeneratorList& other) {
    Twist r{emb.apply(t.axis), {}};
    for (const auto& g : t.sub) r.sub.push_back(emb.apply(g));
    for (const auto& g : other.gens()) r.sub.push_back(g);
    return r;
}

}  // namespace

Classification classify(const Signature& sig) {
    const int n = sig.n();
    const int r = (((sig.q - sig.p) % 8) + 8) % 8;
    auto pow2 = [](int e) { return std::size_t{1} << e; };
    switch (r) {
        case 0:
        case 6: return {Ring::Real, pow2(n / 2)};
        case 1:
        case 5: return {Ring::Complex, pow2((n - 1) / 2)};
        case 2:
        case 4: return {Ring::Quaternion, pow2((n - 2) / 2)};
        case 3: return {Ring::DoubledQuaternion, pow2((n - 3) / 2)};
        default: return {Ring::DoubledReal, pow2((n - 1) / 2)};
    }
}

std::size_t TransformPair::size() const { return p_factors.empty() ? 0 : p_factors.front().rows(); }

MvMatrix TransformPair::p() const {
    return product(p_factors, p_factors.front().signature(), size());
}

MvMatrix TransformPair::pinv() const {
    return product(pinv_factors, pinv_factors.front().signature(), size());
}

bool TransformPair::is_inverse_pair() const { return (scale * (p() * pinv())).is_identity(); }

Replication RepSpec::replication() const {
    for (const auto& s : slots)
        if (!s.empty()) return Replication::ConjugatePairs;
    return Replication::Plain;
}

RingMatrix RepSpec::represent(const Multivector& a) const {
    if (a.signature() != sig)
        throw SignatureMismatch("element over " + a.signature().to_string() + " given to the " +
                                sig.to_string() + " representation");
    if (leaf != LeafKind::None) return leaf_represent(*this, a);

    const RepSpec& big = group_by_second ? *first : *second;
    std::map<BladeMask, std::vector<Term>> groups;
    for (const auto& t : a.terms()) {
        BladeMask mf = 0, ms = 0;
        for (BladeMask h = t.mask; h; h &= h - 1) {
            const auto& pre = preimage[std::countr_zero(h)];
            mf ^= pre.first;
            ms ^= pre.second;
        }
        SignedBlade bf = *first_emb.blade_image(mf), bs = *second_emb.blade_image(ms);
        SignedBlade prod = blade_product(sig, bf.mask, bs.mask);
        int sign = bf.sign * bs.sign * prod.sign;
        Rational c = sign < 0 ? -t.coeff : t.coeff;
        if (group_by_second) groups[ms].push_back({mf, c});
        else groups[mf].push_back({ms, c});
    }
    if (groups.empty()) groups[0];
    RingMatrix acc;
    bool have = false;
    for (auto& [key, terms] : groups) {
        RingMatrix m = big.represent(Multivector::from_terms(big.sig, std::move(terms)));
        RingMatrix term = group_by_second ? kron(m, small_images[key]) : kron(small_images[key], m);
        acc = have ? mat_add(acc, term) : term;
        have = true;
    }
    return acc;
}

SpecPtr make_leaf(LeafKind kind) {
    auto s = std::make_shared<RepSpec>();
    s->leaf = kind;
    s->route = "leaf";
    auto one_by_one = [&](Signature sig) {
        s->sig = sig;
        s->transform.p_factors = {MvMatrix::identity(sig, 1)};
        s->transform.pinv_factors = {MvMatrix::identity(sig, 1)};
        s->slots = {Slot{}};
    };
    switch (kind) {
        case LeafKind::Scalar:
            one_by_one(Signature(0, 0));
            break;
        case LeafKind::Hyperbolic: {
            Signature g(1, 0);
            s->sig = g;
            s->ring = Ring::DoubledReal;
            s->transform.p_factors = {mat(g, {{"1/2+1/2*e1", "-1/2+1/2*e1"}, {"1/2-1/2*e1", "1/2+1/2*e1"}})};
            s->transform.pinv_factors = {mat(g, {{"1/2+1/2*e1", "1/2-1/2*e1"}, {"-1/2+1/2*e1", "1/2+1/2*e1"}})};
            s->slots = {Slot{}, Slot{Twist{Multivector::generator(g, 1), {}}}};
            s->plus_index = {0};
            s->minus_index = {1};
            break;
        }
        case LeafKind::ComplexReal: {
            Signature g(0, 1);
            s->sig = g;
            s->size = 2;
            MvMatrix p = mat(g, {{"1", "eps1"}, {"-1*eps1", "-1"}});
            s->transform.p_factors = {p};
            s->transform.pinv_factors = {p};
            s->transform.scale = Rational(1, 2);
            s->slots = {Slot{}, Slot{Twist{Multivector::generator(g, 1), {}}}};
            break;
        }
        case LeafKind::ComplexUnit:
            one_by_one(Signature(0, 1));
            s->ring = Ring::Complex;
            s->units = {Multivector::generator(s->sig, 1)};
            break;
        case LeafKind::Euclid2: {
            Signature g(2, 0);
            s->sig = g;
            s->size = 2;
            MvMatrix p = mat(g, {{"1/2+1/2*e1", "1/2*e2-1/2*e12"}, {"1/2*e2+1/2*e12", "1/2-1/2*e1"}});
            s->transform.p_factors = {p};
            s->transform.pinv_factors = {p};
            s->slots = {Slot{}, Slot{}};
            break;
        }
        case LeafKind::Split2: {
            Signature g(1, 1);
            s->sig = g;
            s->size = 2;
            MvMatrix p = mat(g, {{"1/2+1/2*e1", "1/2*eps1-1/2*e1*eps1"}, {"-1/2*eps1-1/2*e1*eps1", "1/2-1/2*e1"}});
            s->transform.p_factors = {p};
            s->transform.pinv_factors = {p};
            s->slots = {Slot{}, Slot{}};
            break;
        }
        case LeafKind::Quaternion:
            one_by_one(Signature(0, 2));
            s->ring = Ring::Quaternion;
            s->units = {Multivector::generator(s->sig, 1), Multivector::generator(s->sig, 2)};
            break;
        case LeafKind::QuaternionComplex: {
            Signature g(0, 2);
            s->sig = g;
            s->ring = Ring::Complex;
            s->size = 2;
            s->transform.p_factors = {mat(g, {{"1", "-1*eps1"}, {"-1*eps2", "eps12"}})};
            s->transform.pinv_factors = {mat(g, {{"1", "eps2"}, {"eps1", "-1*eps12"}})};
            s->transform.scale = Rational(1, 2);
            s->units = {Multivector::generator(g, 1)};
            s->slots = {Slot{}, Slot{}};
            break;
        }
        case LeafKind::QuaternionReal: {
            Signature g(0, 2);
            s->sig = g;
            s->size = 4;
            MvMatrix q = mat(g, {{"1/2", "1/2*eps1", "1/2*eps2", "1/2*eps12"},
                                 {"-1/2*eps1", "1/2", "1/2*eps12", "-1/2*eps2"},
                                 {"-1/2*eps2", "-1/2*eps12", "1/2", "1/2*eps1"},
                                 {"-1/2*eps12", "1/2*eps2", "-1/2*eps1", "1/2"}});
            s->transform.p_factors = {q};
            s->transform.pinv_factors = {q};
            s->slots = {Slot{}, Slot{}, Slot{}, Slot{}};
            break;
        }
        case LeafKind::None: throw StructureError("no leaf kind given");
    }
    return s;
}

SpecPtr make_tensor(Signature host, std::string route, SpecPtr first, GeneratorList first_gens, SpecPtr second,
                    GeneratorList second_gens) {
    if (first_gens.host() != host || second_gens.host() != host)
        throw SignatureMismatch("tensor generators must live in " + host.to_string());
    if (first_gens.abstract_signature() != first->sig || second_gens.abstract_signature() != second->sig)
        throw SignatureMismatch("tensor generators do not present the factor signatures");
    for (const auto& f : first_gens.gens())
        for (const auto& g : second_gens.gens())
            if (!(f * g == g * f))
                throw StructureError("tensor factors do not commute: " + format_multivector(f) + " and " +
                                     format_multivector(g));

    auto s = std::make_shared<RepSpec>();
    s->sig = host;
    s->route = std::move(route);
    s->first = first;
    s->second = second;
    s->first_gens = first_gens;
    s->second_gens = second_gens;
    s->first_emb = Embedding(first_gens);
    s->second_emb = Embedding(second_gens);

    std::vector<BladeMask> images;
    for (const auto* gl : {&first_gens, &second_gens})
        for (const auto& g : gl->gens()) {
            auto b = g.as_signed_blade();
            if (!b) throw StructureError("tensor generators must be signed blades");
            images.push_back(b->mask);
        }
    s->preimage = gf2_preimage(host, images, first->sig.n());

    s->ring = tensor_ring(first->ring, second->ring);
    s->size = first->size * second->size;

    const std::size_t sf = first->transform_size(), ss = second->transform_size();
    auto& t = s->transform;
    for (const auto& f : first->transform.p_factors)
        if (!f.is_identity()) t.p_factors.push_back(kron_identity_left(map_entries(f, s->first_emb), ss));
    for (const auto& g : second->transform.p_factors)
        if (!g.is_identity()) t.p_factors.push_back(kron_identity_right(sf, map_entries(g, s->second_emb)));
    for (const auto& g : second->transform.pinv_factors)
        if (!g.is_identity()) t.pinv_factors.push_back(kron_identity_right(sf, map_entries(g, s->second_emb)));
    for (const auto& f : first->transform.pinv_factors)
        if (!f.is_identity()) t.pinv_factors.push_back(kron_identity_left(map_entries(f, s->first_emb), ss));
    if (t.p_factors.empty()) t.p_factors.push_back(MvMatrix::identity(host, sf * ss));
    if (t.pinv_factors.empty()) t.pinv_factors.push_back(MvMatrix::identity(host, sf * ss));
    t.scale = first->transform.scale * second->transform.scale;

    for (const auto& a : first->slots)
        for (const auto& b : second->slots) {
            Slot slot;
            for (const auto& tw : a) slot.push_back(embed_twist(tw, s->first_emb, second_gens));
            for (const auto& tw : b) slot.push_back(embed_twist(tw, s->second_emb, first_gens));
            s->slots.push_back(std::move(slot));
        }

    if (base_ring(first->ring) != Ring::Real)
        for (const auto& u : first->units) s->units.push_back(s->first_emb.apply(u));
    else
        for (const auto& u : second->units) s->units.push_back(s->second_emb.apply(u));

    if (is_doubled(first->ring)) {
        for (auto i : first->plus_index)
            for (std::size_t k = 0; k < ss; ++k) s->plus_index.push_back(i * ss + k);
        for (auto i : first->minus_index)
            for (std::size_t k = 0; k < ss; ++k) s->minus_index.push_back(i * ss + k);
    } else if (is_doubled(second->ring)) {
        for (std::size_t i = 0; i < sf; ++i) {
            for (auto k : second->plus_index) s->plus_index.push_back(i * ss + k);
            for (auto k : second->minus_index) s->minus_index.push_back(i * ss + k);
        }
        std::sort(s->plus_index.begin(), s->plus_index.end());
        std::sort(s->minus_index.begin(), s->minus_index.end());
    }

    s->group_by_second = second->sig.n() <= first->sig.n();
    const RepSpec& small = s->group_by_second ? *second : *first;
    for (BladeMask m = 0; m < (BladeMask{1} << small.sig.n()); ++m)
        s->small_images.push_back(small.represent(Multivector::blade(small.sig, m)));
    return s;
}

MvMatrix conjugate_through(const RepSpec& spec, const Multivector& a) {
    if (a.signature() != spec.sig) throw SignatureMismatch("element outside " + spec.sig.to_string());
    std::map<BladeMask, Splitting> splits;
    std::vector<Multivector> diag;
    for (const auto& slot : spec.slots) {
        Multivector x = a;
        for (const auto& tw : slot) {
            BladeMask key = tw.axis.as_signed_blade()->mask;
            auto it = splits.find(key);
            if (it == splits.end())
                it = splits.emplace(key, Splitting(tw.axis, GeneratorList::spanning_blades(spec.sig, tw.sub))).first;
            x = it->second.conjugate(x);
        }
        diag.push_back(std::move(x));
    }
    MvMatrix m = MvMatrix::diagonal(spec.sig, diag);
    for (const auto& f : spec.transform.pinv_factors) m = m * f;
    for (auto it = spec.transform.p_factors.rbegin(); it != spec.transform.p_factors.rend(); ++it) m = *it * m;
    return spec.transform.scale * std::move(m);
}

RingMatrix read_entries(const RepSpec& spec, const MvMatrix& m) {
    const Ring base = base_ring(spec.ring);
    std::vector<SignedBlade> units;
    std::vector<Multivector> unit_mvs = spec.units;
    if (base == Ring::Quaternion && unit_mvs.size() == 2) unit_mvs.push_back(unit_mvs[0] * unit_mvs[1]);
    for (const auto& u : unit_mvs) {
        auto b = u.as_signed_blade();
        if (!b) throw StructureError("ring unit is not a signed blade");
        units.push_back(*b);
    }
    auto read = [&](std::size_t i, std::size_t j) {
        const Multivector& e = m.at(i, j);
        std::array<Rational, 4> c{};
        std::size_t used = 0;
        c[0] = e.coeff(0);
        used += !c[0].is_zero();
        for (std::size_t k = 0; k < units.size(); ++k) {
            Rational x = e.coeff(units[k].mask);
            used += !x.is_zero();
            c[k + 1] = units[k].sign < 0 ? -x : x;
        }
        if (used != e.size())
            throw EqualityViolation("entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") = " +
                                    format_multivector(e) + " leaves the " + ring_name(base) + " span");
        if (base == Ring::Complex) return RingScalar::complex(c[0], c[1]);
        if (base == Ring::Quaternion) return RingScalar::quaternion(c[0], c[1], c[2], c[3]);
        return RingScalar(c[0]);
    };
    if (!is_doubled(spec.ring)) {
        RingMatrix r = RingMatrix::zero(base, m.rows());
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) r.at(i, j) = read(i, j);
        return r;
    }
    for (auto i : spec.plus_index)
        for (auto j : spec.minus_index)
            if (!m.at(i, j).is_zero() || !m.at(j, i).is_zero())
                throw EqualityViolation("off-block entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                        ") is nonzero");
    auto block = [&](const std::vector<std::size_t>& idx) {
        RingMatrix r = RingMatrix::zero(base, idx.size());
        for (std::size_t i = 0; i < idx.size(); ++i)
            for (std::size_t j = 0; j < idx.size(); ++j) r.at(i, j) = read(idx[i], idx[j]);
        return r;
    };
    return RingMatrix::doubled(block(spec.plus_index), block(spec.minus_index));
}

}  // namespace cliffrep
