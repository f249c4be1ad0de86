#include "oag/model.hpp"

#include <random>

namespace oag {

Ambient::Ambient(FieldSpec field, SceneKind kind, std::vector<Slot> slots)
    : field_(std::move(field)), kind_(kind), slots_(std::move(slots))
{
    if (slots_.empty())
        throw ConfigError("scene needs at least one slot");
    for (size_t s = 0; s < slots_.size(); ++s) {
        if (slots_[s].gens.empty())
            throw ConfigError("slot " + slots_[s].name + " has no generators");
        offsets_.push_back(dim_);
        for (auto& g : slots_[s].gens) {
            if (int(g.c.size()) != field_.degree())
                g = field_.make(g.c);
            if (field_.is_zero(g))
                throw ConfigError("slot " + slots_[s].name + " has a zero generator");
            coord_slot_.push_back(int(s));
        }
        dim_ += slots_[s].gens.size();
    }
    if (kind_ == SceneKind::discrete) {
        const Slot& u = slots_.back();
        if (u.gens.size() != 1 || !(u.gens[0] == field_.one()))
            throw ConfigError("discrete scene: the last slot must be the unit slot with generator 1");
    }
}

int Ambient::slot_index(const std::string& name) const
{
    for (size_t s = 0; s < slots_.size(); ++s)
        if (slots_[s].name == name)
            return int(s);
    throw ConfigError("unknown slot: " + name);
}

GroupElement Ambient::unit() const
{
    GroupElement u = zero();
    if (kind_ == SceneKind::discrete)
        u.v[dim_ - 1] = 1;
    return u;
}

GroupElement Ambient::basis_vector(size_t i) const
{
    GroupElement u = zero();
    u.v[i] = 1;
    return u;
}

QVec Ambient::slot_coords(const GroupElement& x, int slot) const
{
    return QVec(x.v.begin() + offsets_[slot], x.v.begin() + offsets_[slot] + width(slot));
}

FieldElement Ambient::slot_value(const GroupElement& x, int slot) const
{
    FieldElement r = field_.zero();
    for (size_t j = 0; j < width(slot); ++j) {
        const Q& q = x.v[offsets_[slot] + j];
        if (sgn(q) != 0)
            r = field_.add(r, field_.scale(slots_[slot].gens[j], q));
    }
    return r;
}

GroupElement Ambient::add(const GroupElement& a, const GroupElement& b) const
{
    GroupElement r = a;
    for (size_t i = 0; i < dim_; ++i)
        r.v[i] += b.v[i];
    return r;
}

GroupElement Ambient::sub(const GroupElement& a, const GroupElement& b) const
{
    GroupElement r = a;
    for (size_t i = 0; i < dim_; ++i)
        r.v[i] -= b.v[i];
    return r;
}

GroupElement Ambient::scale(const GroupElement& a, const Q& s) const
{
    GroupElement r = a;
    for (auto& x : r.v)
        x *= s;
    return r;
}

GroupElement Ambient::combine(const std::vector<GroupElement>& xs, const QVec& coeffs) const
{
    GroupElement r = zero();
    for (size_t k = 0; k < xs.size(); ++k) {
        if (sgn(coeffs[k]) == 0)
            continue;
        for (size_t i = 0; i < dim_; ++i)
            r.v[i] += coeffs[k] * xs[k].v[i];
    }
    return r;
}

void Ambient::check(const GroupElement& x) const
{
    if (x.v.size() != dim_)
        throw ConfigError("element does not belong to this scene");
}

void Ambient::sanity_check_independence(unsigned seed) const
{
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> d(-9, 9);
    for (const auto& s : slots_) {
        if (s.gens.size() < 2)
            continue;
        for (int trial = 0; trial < 8; ++trial) {
            FieldElement r = field_.zero();
            bool nonzero = false;
            for (const auto& g : s.gens) {
                int c = d(rng);
                nonzero = nonzero || c != 0;
                r = field_.add(r, field_.scale(g, Q(c)));
            }
            if (!nonzero)
                continue;
            auto [lo, hi] = field_.enclose(r, 170);
            if (sgn(lo) <= 0 && sgn(hi) >= 0)
                throw ConfigError("slot " + s.name + " generators look rationally dependent");
        }
    }
}

bool Ambient::operator==(const Ambient& o) const
{
    if (!(field_ == o.field_) || kind_ != o.kind_ || slots_.size() != o.slots_.size())
        return false;
    for (size_t s = 0; s < slots_.size(); ++s)
        if (slots_[s].name != o.slots_[s].name || slots_[s].gens != o.slots_[s].gens)
            return false;
    return true;
}

int sign_of(const Ambient& amb, const GroupElement& x)
{
    for (int s = 0; s < amb.nslots(); ++s) {
        size_t off = amb.offset(s), w = amb.width(s);
        bool nz = false;
        for (size_t j = 0; j < w && !nz; ++j)
            nz = sgn(x.v[off + j]) != 0;
        if (!nz)
            continue;
        if (w == 1)
            return sgn(x.v[off]) * amb.field().sign(amb.slots()[s].gens[0]);
        return amb.field().sign(amb.slot_value(x, s));
    }
    return 0;
}

int compare_elements(const Ambient& amb, const GroupElement& x, const GroupElement& y)
{
    amb.check(x);
    amb.check(y);
    return sign_of(amb, amb.sub(x, y));
}

ArchClass arch_class(const Ambient& amb, const GroupElement& x)
{
    for (size_t i = 0; i < x.v.size(); ++i)
        if (sgn(x.v[i]) != 0)
            return ArchClass{amb.level_of_slot(amb.slot_of_coord(i))};
    return ArchClass{0};
}

SpanHandle::SpanHandle(const Ambient& amb, std::vector<GroupElement> gens) : gens_(std::move(gens))
{
    QMat rows;
    for (const auto& g : gens_) {
        amb.check(g);
        rows.push_back(g.v);
    }
    ech_ = rref(rows, amb.dim());
    for (int p : ech_.pivots) {
        int level = amb.level_of_slot(amb.slot_of_coord(p));
        row_level_.push_back(level);
        levels_.insert(level);
    }
}

SpanHandle SpanHandle::whole(const Ambient& amb)
{
    std::vector<GroupElement> g;
    for (size_t i = 0; i < amb.dim(); ++i)
        g.push_back(amb.basis_vector(i));
    return SpanHandle(amb, g);
}

std::vector<GroupElement> SpanHandle::basis() const
{
    std::vector<GroupElement> b;
    for (const auto& r : ech_.rows)
        b.push_back(GroupElement{r});
    return b;
}

int SpanHandle::prev_level(int level) const
{
    auto it = levels_.lower_bound(level);
    if (it == levels_.begin())
        return 0;
    return *std::prev(it);
}

int SpanHandle::next_level(int level) const
{
    auto it = levels_.upper_bound(level);
    if (it == levels_.end())
        return -1;
    return *it;
}

SpanHandle SpanHandle::join(const Ambient& amb, const std::vector<GroupElement>& more) const
{
    std::vector<GroupElement> g = basis();
    g.insert(g.end(), more.begin(), more.end());
    return SpanHandle(amb, g);
}

bool SpanHandle::contains_span(const SpanHandle& other) const
{
    for (const auto& r : other.ech_.rows)
        if (!in_row_space(ech_, r))
            return false;
    return true;
}

SpanQuery span_query(const Ambient& amb, const SpanHandle& V, const GroupElement& x)
{
    amb.check(x);
    SpanQuery q;
    q.residue = x;
    q.member = reduce_against(V.echelon(), q.residue.v);
    return q;
}

std::vector<std::pair<ArchClass, int>> arch_classes_of_span(const Ambient&, const SpanHandle& V)
{
    std::vector<std::pair<ArchClass, int>> out;
    for (int level : V.row_levels()) {
        if (!out.empty() && out.back().first.level == level)
            ++out.back().second;
        else
            out.push_back({ArchClass{level}, 1});
    }
    return out;
}

Reduction reduce(const Ambient& amb, const SpanHandle& V, const GroupElement& x)
{
    Reduction r;
    r.residue = x;
    reduce_against(V.echelon(), r.residue.v);
    r.part = amb.sub(x, r.residue);
    r.mu = arch_class(amb, r.residue).level;
    return r;
}

QMat slot_part_space(const Ambient& amb, const SpanHandle& V, int level)
{
    int slot = amb.slot_of_level(level);
    QMat out;
    const auto& e = V.echelon();
    for (size_t i = 0; i < e.rows.size(); ++i)
        if (V.row_levels()[i] == level)
            out.push_back(amb.slot_coords(GroupElement{e.rows[i]}, slot));
    return out;
}

QMat lambda_subspace(const Ambient& amb, const std::vector<GroupElement>& xs, const SpanHandle& D,
                     int level)
{
    size_t k = xs.size();
    if (k == 0)
        return {};
    auto basis = D.echelon().rows;
    size_t m = basis.size();
    int limit = amb.nslots() - std::max(level, 0);
    size_t ncoord = limit <= 0 ? 0 : (limit >= amb.nslots() ? amb.dim() : amb.offset(limit));
    QMat eqs;
    for (size_t c = 0; c < ncoord; ++c) {
        QVec row(k + m, Q(0));
        bool nz = false;
        for (size_t i = 0; i < k; ++i) {
            row[i] = xs[i].v[c];
            nz = nz || sgn(row[i]) != 0;
        }
        for (size_t j = 0; j < m; ++j) {
            row[k + j] = -basis[j][c];
            nz = nz || sgn(row[k + j]) != 0;
        }
        if (nz)
            eqs.push_back(std::move(row));
    }
    QMat ns = nullspace(eqs, k + m);
    QMat proj;
    for (auto& v : ns)
        proj.push_back(QVec(v.begin(), v.begin() + k));
    return row_space_basis(proj, k);
}

}
