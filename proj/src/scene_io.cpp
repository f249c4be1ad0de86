#include "oag/scene_io.hpp"

#include <fstream>
#include <sstream>

namespace oag {

namespace {

std::string trim_ws(const std::string& s)
{
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos)
        return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> words(const std::string& s)
{
    std::istringstream is(s);
    std::vector<std::string> out;
    std::string w;
    while (is >> w)
        out.push_back(w);
    return out;
}

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            out.push_back(trim_ws(cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(trim_ws(cur));
    return out;
}

Q rat(const std::string& s)
{
    size_t slash = s.find('/');
    if (slash != std::string::npos && trim_ws(s.substr(slash + 1)) == "0")
        throw ConfigError("zero denominator: " + s);
    return parse_rational(s[0] == '+' ? s.substr(1) : s);
}

Z integer(const std::string& s)
{
    Z z;
    if (z.set_str(s[0] == '+' ? s.substr(1) : s, 10) != 0)
        throw ConfigError("bad integer: " + s);
    return z;
}

long small_int(const std::string& s)
{
    Z z = integer(s);
    if (!z.fits_slong_p())
        throw ConfigError("integer out of range: " + s);
    return z.get_si();
}

std::pair<std::string, std::string> key_value(const std::string& line)
{
    size_t eq = line.find('=');
    if (eq == std::string::npos)
        throw ConfigError("expected 'key = value'");
    auto k = trim_ws(line.substr(0, eq));
    if (k.empty())
        throw ConfigError("missing name before '='");
    return {k, trim_ws(line.substr(eq + 1))};
}

std::vector<FieldElement> field_elements(const FieldSpec& F, const std::string& text)
{
    std::vector<FieldElement> out;
    size_t i = 0;
    while (true) {
        i = text.find_first_not_of(" \t", i);
        if (i == std::string::npos)
            break;
        if (text[i] != '[')
            throw ConfigError("expected '[' in field element list");
        size_t j = text.find(']', i);
        if (j == std::string::npos)
            throw ConfigError("unterminated '['");
        QVec c;
        for (const auto& w : words(text.substr(i + 1, j - i - 1)))
            c.push_back(rat(w));
        if (c.empty())
            throw ConfigError("empty field element");
        if (int(c.size()) > F.degree())
            throw ConfigError("field element has more coefficients than the field degree");
        out.push_back(F.make(c));
        i = j + 1;
    }
    return out;
}

struct Pending {
    std::string section;
    std::string name;
    std::string text;
    int line;
};

}

std::string rational_text(const Q& q)
{
    if (q.get_den() == 1)
        return q.get_num().get_str();
    return q.get_str();
}

GroupElement parse_element(const Ambient& amb, const std::string& text)
{
    GroupElement x = amb.zero();
    std::set<int> seen;
    for (const auto& part : words(text)) {
        size_t colon = part.find(':');
        if (colon == std::string::npos)
            throw ConfigError("expected slot:coefficients, got " + part);
        int s = amb.slot_index(part.substr(0, colon));
        if (!seen.insert(s).second)
            throw ConfigError("slot " + part.substr(0, colon) + " given twice");
        auto coefs = split(part.substr(colon + 1), ',');
        if (coefs.size() != amb.width(s))
            throw ConfigError("slot " + amb.slots()[s].name + " expects " + std::to_string(amb.width(s)) +
                              " coefficients");
        for (size_t j = 0; j < coefs.size(); ++j)
            x.v[amb.offset(s) + j] = rat(coefs[j]);
    }
    return x;
}

std::string element_text(const Ambient& amb, const GroupElement& x)
{
    std::string out;
    for (int s = 0; s < amb.nslots(); ++s) {
        QVec c = amb.slot_coords(x, s);
        if (is_zero(c))
            continue;
        if (!out.empty())
            out += ' ';
        out += amb.slots()[s].name + ':';
        for (size_t j = 0; j < c.size(); ++j)
            out += (j ? "," : "") + rational_text(c[j]);
    }
    if (out.empty()) {
        out = amb.slots()[0].name + ":0";
        for (size_t j = 1; j < amb.width(0); ++j)
            out += ",0";
    }
    return out;
}

Scene parse_scene(std::istream& in)
{
    Scene sc;
    std::string raw, section;
    int lineno = 0;
    bool have_version = false;
    Poly minpoly{Q(0), Q(1)};
    Q lo = -1, hi = 1;
    bool have_interval = false;
    SceneKind kind = SceneKind::dense;
    std::vector<Slot> slots;
    std::vector<std::pair<std::string, int>> slot_lines;
    std::vector<Pending> pending;
    std::set<std::string> sections;
    try {
        while (std::getline(in, raw)) {
            ++lineno;
            std::string line = trim_ws(raw.substr(0, raw.find('#')));
            if (line.empty())
                continue;
            if (line.front() == '[' && line.back() == ']') {
                section = trim_ws(line.substr(1, line.size() - 2));
                static const std::set<std::string> known{"field", "slots", "congruence", "A", "B", "c"};
                if (!known.count(section))
                    throw ConfigError("unknown section [" + section + "]");
                if (!sections.insert(section).second)
                    throw ConfigError("section [" + section + "] repeated");
                continue;
            }
            if (section.empty()) {
                auto w = words(line);
                if (w.size() != 2 || w[0] != "version")
                    throw ConfigError("expected 'version 1' before the first section");
                sc.version = int(small_int(w[1]));
                if (sc.version != 1)
                    throw ConfigError("unsupported scene version " + w[1]);
                have_version = true;
                continue;
            }
            if (section == "field") {
                auto [k, v] = key_value(line);
                if (k == "minpoly") {
                    minpoly.clear();
                    for (const auto& w : words(v))
                        minpoly.push_back(rat(w));
                } else if (k == "interval") {
                    auto w = words(v);
                    if (w.size() != 2)
                        throw ConfigError("interval needs two rationals");
                    lo = rat(w[0]);
                    hi = rat(w[1]);
                    have_interval = true;
                } else {
                    throw ConfigError("unknown field key " + k);
                }
            } else if (section == "slots") {
                auto [k, v] = key_value(line);
                if (k == "kind") {
                    if (v == "dense")
                        kind = SceneKind::dense;
                    else if (v == "discrete")
                        kind = SceneKind::discrete;
                    else
                        throw ConfigError("kind must be dense or discrete");
                } else {
                    slot_lines.push_back({line, lineno});
                }
            } else if (section == "congruence") {
                auto w = words(line);
                if (w[0] == "prime") {
                    if (w.size() < 3)
                        throw ConfigError("prime line needs a kind");
                    PrimeSpec p;
                    p.l = small_int(w[1]);
                    if (w[2] == "divisible" && w.size() == 3) {
                        p.kind = PrimeKind::divisible;
                    } else if ((w[2] == "finite" || w[2] == "infinite") && w.size() == 4) {
                        p.kind = w[2] == "finite" ? PrimeKind::finite : PrimeKind::infinite;
                        p.dim = int(small_int(w[3]));
                        if (p.dim < 1)
                            throw ConfigError("residue dimension must be positive");
                    } else {
                        throw ConfigError("prime line: expected 'divisible', 'finite d' or 'infinite m'");
                    }
                    sc.congruence.primes.push_back(p);
                } else if (w[0] == "residue") {
                    auto [k, v] = key_value(line);
                    auto kw = words(k);
                    if (kw.size() != 3)
                        throw ConfigError("expected 'residue l name = ints'");
                    long l = small_int(kw[1]);
                    PrimeSpec* target = nullptr;
                    for (auto& p : sc.congruence.primes)
                        if (p.l == l)
                            target = &p;
                    if (!target)
                        throw ConfigError("residue for undeclared prime " + kw[1]);
                    ZVec r;
                    for (const auto& x : words(v))
                        r.push_back(integer(x));
                    if (!target->residues.emplace(kw[2], r).second)
                        throw ConfigError("residue of " + kw[2] + " given twice");
                } else if (w[0] == "nmax") {
                    auto [k, v] = key_value(line);
                    if (v == "auto")
                        sc.congruence.nmax = 0;
                    else {
                        sc.congruence.nmax = int(small_int(v));
                        if (sc.congruence.nmax < 1)
                            throw ConfigError("nmax must be positive or auto");
                    }
                } else {
                    throw ConfigError("unknown congruence line");
                }
            } else {
                auto [k, v] = key_value(line);
                pending.push_back({section, k, v, lineno});
            }
        }
        if (!have_version)
            throw ConfigError("missing version line");
        if (sections.count("field") && !have_interval && minpoly != Poly{Q(0), Q(1)})
            throw ConfigError("field needs an isolating interval");
        FieldSpec F(minpoly, lo, hi);
        for (const auto& [line, ln] : slot_lines) {
            lineno = ln;
            auto [k, v] = key_value(line);
            for (const auto& s : slots)
                if (s.name == k)
                    throw ConfigError("slot " + k + " declared twice");
            if (k.find(':') != std::string::npos)
                throw ConfigError("slot names cannot contain ':'");
            slots.push_back(Slot{k, field_elements(F, v)});
        }
        sc.amb = Ambient(F, kind, slots);
        for (const auto& p : pending) {
            lineno = p.line;
            NamedElement e{p.name, parse_element(sc.amb, p.text)};
            auto& list = p.section == "A" ? sc.A : p.section == "B" ? sc.B : sc.c;
            list.push_back(e);
        }
        lineno = 0;
        sc.validate();
    } catch (const ConfigError& e) {
        if (lineno > 0)
            throw ConfigError("line " + std::to_string(lineno) + ": " + e.what());
        throw;
    }
    return sc;
}

Scene parse_scene_text(const std::string& text)
{
    std::istringstream is(text);
    return parse_scene(is);
}

Scene load_scene(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open scene file " + path);
    return parse_scene(in);
}

static std::string fe_text(const FieldElement& e)
{
    std::string out = "[";
    for (size_t i = 0; i < e.c.size(); ++i)
        out += (i ? " " : "") + rational_text(e.c[i]);
    return out + "]";
}

std::string serialize_scene(const Scene& sc)
{
    std::ostringstream os;
    const Ambient& amb = sc.amb;
    os << "version " << sc.version << "\n\n[field]\nminpoly =";
    for (const auto& q : amb.field().minpoly())
        os << ' ' << rational_text(q);
    os << "\ninterval = " << rational_text(amb.field().given_lo()) << ' ' << rational_text(amb.field().given_hi())
       << "\n\n[slots]\nkind = " << (amb.kind() == SceneKind::dense ? "dense" : "discrete") << '\n';
    for (const auto& s : amb.slots()) {
        os << s.name << " =";
        for (const auto& g : s.gens)
            os << ' ' << fe_text(g);
        os << '\n';
    }
    os << "\n[congruence]\n";
    for (const auto& p : sc.congruence.primes) {
        os << "prime " << p.l << ' ';
        if (p.kind == PrimeKind::divisible)
            os << "divisible\n";
        else
            os << (p.kind == PrimeKind::finite ? "finite " : "infinite ") << p.dim << '\n';
        for (const auto& [name, r] : p.residues) {
            os << "residue " << p.l << ' ' << name << " =";
            for (const auto& z : r)
                os << ' ' << z.get_str();
            os << '\n';
        }
    }
    os << "nmax = " << (sc.congruence.nmax > 0 ? std::to_string(sc.congruence.nmax) : "auto") << '\n';
    for (const auto& [title, list] : {std::pair{"A", &sc.A}, std::pair{"B", &sc.B}, std::pair{"c", &sc.c}}) {
        os << "\n[" << title << "]\n";
        for (const auto& e : *list)
            os << e.name << " = " << element_text(amb, e.value) << '\n';
    }
    return os.str();
}

}
