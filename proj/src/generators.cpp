#include <algorithm>

#include "cliffrep/multivector.hpp"

namespace cliffrep {

namespace {

int square_sign(const Multivector& g) {
    Multivector sq = g * g;
    if (sq == Multivector::scalar(g.signature(), 1)) return 1;
    if (sq == Multivector::scalar(g.signature(), -1)) return -1;
    return 0;
}

void check_anticommute(const std::vector<Multivector>& gens) {
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i + 1; j < gens.size(); ++j)
            if (!(gens[i] * gens[j] + gens[j] * gens[i]).is_zero())
                throw StructureError("generators " + std::to_string(i + 1) + " and " +
                                     std::to_string(j + 1) + " do not anticommute");
}

bool commute(const Multivector& a, const Multivector& b) { return a * b == b * a; }

}  // namespace

GeneratorList::GeneratorList(Signature host, std::vector<Multivector> gens, std::vector<int> squares)
    : host_(host), gens_(std::move(gens)), squares_(std::move(squares)) {
    if (gens_.size() != squares_.size()) throw StructureError("generator/square count mismatch");
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (gens_[i].signature() != host_) throw SignatureMismatch("generator outside host algebra");
        if (square_sign(gens_[i]) != squares_[i] || (squares_[i] != 1 && squares_[i] != -1))
            throw StructureError("generator " + std::to_string(i + 1) + " does not square to declared " +
                                 std::to_string(squares_[i]));
    }
    check_anticommute(gens_);
}

GeneratorList GeneratorList::checked(Signature host, std::vector<Multivector> gens) {
    std::vector<int> squares;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        int s = square_sign(gens[i]);
        if (s == 0) throw StructureError("generator " + std::to_string(i + 1) + " does not square to +-1");
        squares.push_back(s);
    }
    return GeneratorList(host, std::move(gens), std::move(squares));
}

GeneratorList GeneratorList::standard(Signature sig) {
    GeneratorList g;
    g.host_ = sig;
    for (int i = 1; i <= sig.n(); ++i) {
        g.gens_.push_back(Multivector::generator(sig, i));
        g.squares_.push_back(i <= sig.p ? 1 : -1);
    }
    return g;
}

GeneratorList GeneratorList::spanning_blades(Signature host, std::vector<Multivector> gens) {
    GeneratorList g;
    g.host_ = host;
    for (auto& b : gens) {
        auto sb = b.as_signed_blade();
        if (!sb || b.signature() != host) throw StructureError("spanning set must hold signed blades of the host");
        g.squares_.push_back(blade_square(host, sb->mask));
        g.gens_.push_back(std::move(b));
    }
    return g;
}

Signature GeneratorList::abstract_signature() const {
    int p = 0;
    while (p < static_cast<int>(squares_.size()) && squares_[p] == 1) ++p;
    for (std::size_t i = p; i < squares_.size(); ++i)
        if (squares_[i] != -1) throw StructureError("generator squares are not ordered +1 before -1");
    return Signature(p, static_cast<int>(squares_.size()) - p);
}

GeneratorList GeneratorList::concat(const GeneratorList& other) const {
    if (other.host_ != host_ && !other.empty() && !empty())
        throw SignatureMismatch("generator lists over different hosts");
    std::vector<Multivector> g = gens_;
    std::vector<int> s = squares_;
    g.insert(g.end(), other.gens_.begin(), other.gens_.end());
    s.insert(s.end(), other.squares_.begin(), other.squares_.end());
    return GeneratorList(empty() ? other.host_ : host_, std::move(g), std::move(s));
}

Embedding::Embedding(GeneratorList gens) : gens_(std::move(gens)) {
    abstract_ = gens_.abstract_signature();
    monomial_ = std::all_of(gens_.gens().begin(), gens_.gens().end(),
                            [](const Multivector& g) { return g.as_signed_blade().has_value(); });
    if (monomial_ && abstract_.n() <= 20) {
        const Signature& h = gens_.host();
        std::size_t count = std::size_t{1} << abstract_.n();
        table_.resize(count);
        table_[0] = {1, 0};
        for (std::size_t m = 1; m < count; ++m) {
            int low = std::countr_zero(static_cast<unsigned>(m));
            // e_m = g_low * e_{m without low}, low is the smallest index
            SignedBlade rest = table_[m & (m - 1)];
            SignedBlade g = *gens_[low].as_signed_blade();
            SignedBlade prod = blade_product(h, g.mask, rest.mask);
            table_[m] = {g.sign * rest.sign * prod.sign, prod.mask};
        }
    }
}

std::optional<SignedBlade> Embedding::blade_image(BladeMask abstract_mask) const {
    if (!table_.empty()) return table_[abstract_mask];
    return image_of_blade(abstract_mask).as_signed_blade();
}

Multivector Embedding::image_of_blade(BladeMask m) const {
    if (!abstract_.fits(m)) throw WidthError("blade mask exceeds abstract signature");
    if (!table_.empty()) return Multivector::blade(host(), table_[m].mask, table_[m].sign);
    Multivector r = Multivector::scalar(host(), 1);
    for (int i = 0; i < abstract_.n(); ++i)
        if (m & (BladeMask{1} << i)) r = r * gens_[i];
    return r;
}

Multivector Embedding::apply(const Multivector& a) const {
    if (a.signature() != abstract_)
        throw SignatureMismatch("reindex: element over " + a.signature().to_string() +
                                ", generators present " + abstract_.to_string());
    if (!table_.empty()) {
        std::vector<Term> out;
        out.reserve(a.size());
        for (const auto& t : a.terms()) {
            const SignedBlade& b = table_[t.mask];
            out.push_back({b.mask, b.sign < 0 ? -t.coeff : t.coeff});
        }
        return Multivector::from_terms(host(), std::move(out));
    }
    Multivector r(host());
    for (const auto& t : a.terms()) r += t.coeff * image_of_blade(t.mask);
    return r;
}

Multivector reindex(const Multivector& a_abstract, const GeneratorList& gens) {
    return Embedding(gens).apply(a_abstract);
}

Splitting::Splitting(Multivector u, GeneratorList sub) : u_(std::move(u)), sub_(std::move(sub)) {
    auto ub = u_.as_signed_blade();
    if (!ub) throw StructureError("split axis must be a signed blade");
    const Signature& h = u_.signature();
    if (!sub_.empty() && sub_.host() != h) throw SignatureMismatch("split axis and subalgebra hosts differ");
    for (std::size_t i = 0; i < sub_.size(); ++i) {
        auto g = sub_[i].as_signed_blade();
        if (!g) throw StructureError("split subalgebra generators must be signed blades");
        if (!commute(u_, sub_[i])) throw StructureError("split axis does not commute with the subalgebra");
    }
    std::size_t k = sub_.size();
    if (k >= 31) throw WidthError("subalgebra too large");
    std::size_t count = std::size_t{1} << k;
    std::vector<SignedBlade> inner(count);
    inner[0] = {1, 0};
    for (std::size_t m = 1; m < count; ++m) {
        int low = std::countr_zero(static_cast<unsigned>(m));
        SignedBlade rest = inner[m & (m - 1)];
        SignedBlade g = *sub_[low].as_signed_blade();
        SignedBlade prod = blade_product(h, g.mask, rest.mask);
        inner[m] = {g.sign * rest.sign * prod.sign, prod.mask};
    }
    table_.reserve(2 * count);
    for (std::size_t m = 0; m < count; ++m) {
        const SignedBlade& s = inner[m];
        table_.push_back({s.mask, Entry{false, 1, s.mask}});
        // e_S * u = ub.sign * su.sign * e_B, and that sign is its own inverse
        SignedBlade su = blade_product(h, s.mask, ub->mask);
        table_.push_back({su.mask, Entry{true, ub->sign * su.sign, s.mask}});
    }
    std::sort(table_.begin(), table_.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    for (std::size_t i = 1; i < table_.size(); ++i)
        if (table_[i].first == table_[i - 1].first)
            throw StructureError("split axis lies in the subalgebra; decomposition not unique");
}

const Splitting::Entry& Splitting::lookup(BladeMask mask) const {
    auto it = std::lower_bound(table_.begin(), table_.end(), mask,
                               [](const auto& e, BladeMask m) { return e.first < m; });
    if (it == table_.end() || it->first != mask)
        throw DecompositionError("blade not reachable from the split axis and subalgebra");
    return it->second;
}

std::pair<Multivector, Multivector> Splitting::split(const Multivector& a) const {
    require_same_signature(a, u_);
    std::vector<Term> even, odd;
    for (const auto& t : a.terms()) {
        const Entry& e = lookup(t.mask);
        if (!e.odd) even.push_back(t);
        else odd.push_back({e.inner, e.sign < 0 ? -t.coeff : t.coeff});
    }
    return {Multivector::from_terms(a.signature(), std::move(even)),
            Multivector::from_terms(a.signature(), std::move(odd))};
}

Multivector Splitting::conjugate(const Multivector& a) const {
    require_same_signature(a, u_);
    std::vector<Term> out;
    out.reserve(a.size());
    for (const auto& t : a.terms()) {
        const Entry& e = lookup(t.mask);
        out.push_back({t.mask, e.odd ? -t.coeff : t.coeff});
    }
    return Multivector::from_terms(a.signature(), std::move(out));
}

std::pair<Multivector, Multivector> split_along(const Multivector& a, const Multivector& u,
                                                const GeneratorList& sub) {
    return Splitting(u, sub).split(a);
}

Multivector conjugate_along(const Multivector& a, const Multivector& u, const GeneratorList& sub) {
    return Splitting(u, sub).conjugate(a);
}

}  // namespace cliffrep
