#include "grpcover/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

#include "grpcover/errors.hpp"
#include "grpcover/iso.hpp"
#include "grpcover/sha256.hpp"

namespace grpcover {

extern const char* kBundledCatalogText;  // catalog_data.cpp

std::string canonical_entry_line(const CatalogEntry& e) {
    std::string line = "group " + std::to_string(e.order) + " " +
                       std::to_string(e.id) + " degree " +
                       std::to_string(e.degree);
    if (!e.name.empty()) line += " name " + e.name;
    line += " gens ";
    for (std::size_t i = 0; i < e.generators.generators.size(); ++i) {
        if (i) line += ";";
        line += e.generators.generators[i].cycle_string();
    }
    return line;
}

namespace {

std::string canonical_section_text(int order, int declared,
                                   const std::vector<CatalogEntry>& entries) {
    std::string text =
        "order " + std::to_string(order) + " count " + std::to_string(declared) + "\n";
    for (const auto& e : entries) text += canonical_entry_line(e) + "\n";
    return text;
}

std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream is(line);
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

int to_int(const std::string& s, int lineno) {
    try {
        std::size_t used = 0;
        int v = std::stoi(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw CatalogError("line " + std::to_string(lineno) +
                           ": expected a number, got '" + s + "'");
    }
}

}  // namespace

Catalog Catalog::parse(const std::string& text) {
    Catalog cat;
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    int open_order = -1;
    int open_declared = 0;
    std::vector<CatalogEntry> open_entries;

    auto close_section = [&](const std::vector<std::string>& toks) {
        if (toks.size() != 4 || toks[2] != "sha256")
            throw CatalogError("line " + std::to_string(lineno) +
                               ": malformed end line");
        const int n = to_int(toks[1], lineno);
        if (n != open_order)
            throw CatalogError("line " + std::to_string(lineno) +
                               ": end order mismatch");
        const std::string canon =
            canonical_section_text(open_order, open_declared, open_entries);
        std::string want = toks[3];
        std::transform(want.begin(), want.end(), want.begin(), ::tolower);
        if (sha256_hex(canon) != want)
            throw ChecksumError(open_order, "checksum mismatch in section " +
                                                std::to_string(open_order));
        if (static_cast<int>(open_entries.size()) != open_declared)
            throw CatalogError("section " + std::to_string(open_order) +
                               " declares " + std::to_string(open_declared) +
                               " entries but lists " +
                               std::to_string(open_entries.size()));
        Section s;
        s.declared = open_declared;
        s.entries = std::move(open_entries);
        cat.sections_.emplace(open_order, std::move(s));
        open_order = -1;
        open_entries.clear();
    };

    while (std::getline(is, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::string trimmed = line;
        std::size_t first = trimmed.find_first_not_of(" \t");
        if (first == std::string::npos) continue;
        if (trimmed[first] == '#') continue;
        auto toks = split_ws(trimmed);
        if (toks[0] == "order") {
            if (open_order >= 0)
                throw CatalogError("line " + std::to_string(lineno) +
                                   ": section not closed before new section");
            if (toks.size() != 4 || toks[2] != "count")
                throw CatalogError("line " + std::to_string(lineno) +
                                   ": malformed order line");
            open_order = to_int(toks[1], lineno);
            open_declared = to_int(toks[3], lineno);
            if (cat.sections_.count(open_order))
                throw CatalogError("line " + std::to_string(lineno) +
                                   ": duplicate section for order " +
                                   std::to_string(open_order));
            continue;
        }
        if (toks[0] == "group") {
            if (open_order < 0)
                throw CatalogError("line " + std::to_string(lineno) +
                                   ": group line outside a section");
            std::size_t i = 1;
            CatalogEntry e;
            if (toks.size() < 7)
                throw CatalogError("line " + std::to_string(lineno) +
                                   ": malformed group line");
            e.order = to_int(toks[i++], lineno);
            e.id = to_int(toks[i++], lineno);
            if (toks[i++] != "degree")
                throw CatalogError("line " + std::to_string(lineno) +
                                   ": expected 'degree'");
            e.degree = to_int(toks[i++], lineno);
            if (toks[i] == "name") {
                ++i;
                e.name = toks[i++];
            }
            if (i >= toks.size() || toks[i] != "gens")
                throw CatalogError("line " + std::to_string(lineno) +
                                   ": expected 'gens'");
            ++i;
            if (i + 1 != toks.size())
                throw CatalogError("line " + std::to_string(lineno) +
                                   ": generators must not contain spaces");
            e.generators.degree = e.degree;
            std::stringstream gs(toks[i]);
            std::string one;
            while (std::getline(gs, one, ';')) {
                try {
                    e.generators.generators.push_back(parse_cycles(one, e.degree));
                } catch (const Error& err) {
                    throw CatalogError("line " + std::to_string(lineno) + ": " +
                                       err.what());
                }
            }
            if (e.generators.generators.empty())
                throw CatalogError("line " + std::to_string(lineno) +
                                   ": entry has no generators");
            if (e.order != open_order)
                throw CatalogError("line " + std::to_string(lineno) +
                                   ": entry order does not match section");
            for (const auto& prev : open_entries)
                if (prev.id == e.id)
                    throw CatalogError("line " + std::to_string(lineno) +
                                       ": duplicate entry (" +
                                       std::to_string(e.order) + "," +
                                       std::to_string(e.id) + ")");
            // closure order check
            std::vector<Permutation> elems;
            try {
                elems = generate_elements(e.generators, e.order);
            } catch (const CapExceeded&) {
                throw CatalogError("entry (" + std::to_string(e.order) + "," +
                                   std::to_string(e.id) +
                                   ") closure exceeds the declared order");
            }
            if (static_cast<int>(elems.size()) != e.order)
                throw CatalogError("entry (" + std::to_string(e.order) + "," +
                                   std::to_string(e.id) + ") closure has order " +
                                   std::to_string(elems.size()));
            open_entries.push_back(std::move(e));
            continue;
        }
        if (toks[0] == "end") {
            if (open_order < 0)
                throw CatalogError("line " + std::to_string(lineno) +
                                   ": end line outside a section");
            close_section(toks);
            continue;
        }
        throw CatalogError("line " + std::to_string(lineno) +
                           ": unrecognized line '" + toks[0] + "'");
    }
    if (open_order >= 0)
        throw CatalogError("unterminated section for order " +
                           std::to_string(open_order));
    for (auto& [order, sec] : cat.sections_)
        std::sort(sec.entries.begin(), sec.entries.end(),
                  [](const CatalogEntry& a, const CatalogEntry& b) {
                      return a.id < b.id;
                  });
    return cat;
}

Catalog Catalog::load_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw Error("cannot open catalog file: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return parse(ss.str());
}

const Catalog& Catalog::bundled() {
    static const Catalog cat = Catalog::parse(kBundledCatalogText);
    return cat;
}

bool Catalog::has_order(int n) const { return sections_.count(n) != 0; }

int Catalog::declared_count(int n) const {
    auto it = sections_.find(n);
    return it == sections_.end() ? 0 : it->second.declared;
}

const std::vector<CatalogEntry>& Catalog::entries(int n) const {
    auto it = sections_.find(n);
    if (it == sections_.end())
        throw CatalogError("catalog has no section for order " +
                           std::to_string(n));
    return it->second.entries;
}

const CatalogEntry* Catalog::find(int n, int id) const {
    auto it = sections_.find(n);
    if (it == sections_.end()) return nullptr;
    for (const auto& e : it->second.entries)
        if (e.id == id) return &e;
    return nullptr;
}

std::vector<int> Catalog::orders() const {
    std::vector<int> out;
    for (const auto& [n, s] : sections_) out.push_back(n);
    return out;
}

GroupPtr Catalog::group(int n, int id) const {
    auto key = std::make_pair(n, id);
    auto hit = cache_.find(key);
    if (hit != cache_.end()) return hit->second;
    const CatalogEntry* e = find(n, id);
    if (!e)
        throw CatalogError("catalog miss: SG(" + std::to_string(n) + "," +
                           std::to_string(id) + ")");
    auto elems = generate_elements(e->generators, e->order);
    auto g = GroupTable::from_elements(
        elems, "SG(" + std::to_string(n) + "," + std::to_string(id) + ")");
    cache_.emplace(key, g);
    return g;
}

CatalogReport verify_catalog(const Catalog& c) {
    CatalogReport report;
    for (int n : c.orders()) {
        const auto& entries = c.entries(n);
        if (static_cast<int>(entries.size()) != c.declared_count(n))
            report.issues.push_back(
                {n, "declared count " + std::to_string(c.declared_count(n)) +
                        " does not match " + std::to_string(entries.size())});
        std::vector<GroupPtr> tables;
        std::vector<Fingerprint> fps;
        for (const auto& e : entries) {
            ++report.entries_checked;
            GroupPtr g;
            try {
                g = c.group(e.order, e.id);  // from_table validates invariants
            } catch (const Error& err) {
                report.issues.push_back({n, "entry (" + std::to_string(e.order) +
                                                "," + std::to_string(e.id) +
                                                "): " + err.what()});
                continue;
            }
            tables.push_back(g);
            fps.push_back(fingerprint(g));
        }
        for (std::size_t i = 0; i < tables.size(); ++i)
            for (std::size_t j = i + 1; j < tables.size(); ++j) {
                if (fps[i] != fps[j]) continue;
                if (are_isomorphic(tables[i], tables[j]))
                    report.issues.push_back(
                        {n, "entries " + tables[i]->label() + " and " +
                                tables[j]->label() + " are isomorphic"});
            }
    }
    return report;
}

bool sylow_forced_normal(long m, long p) {
    if (!is_prime(p)) throw Error("p must be prime");
    if (m % p == 0) throw Error("p must not divide m");
    for (long d = 1; d * d <= m; ++d) {
        if (m % d != 0) continue;
        const long e = m / d;
        if (d != 1 && d % p == 1) return false;
        if (e != 1 && e % p == 1) return false;
    }
    return true;
}

std::vector<HomToCyclic> hom_classes_to_cyclic(const GroupPtr& k, int d) {
    if (d < 1) throw Error("cyclic target order must be at least 1");
    AbelianizationMap ab = abelianization_map(k);
    const std::size_t r = ab.factors.size();

    // images of factor generators: u_i must satisfy d_i * u_i = 0 mod d
    std::vector<std::vector<int>> choices(r);
    for (std::size_t i = 0; i < r; ++i) {
        const int g = std::gcd(ab.factors[i], d);
        const int step = d / g;
        for (int t = 0; t < g; ++t) choices[i].push_back(t * step);
    }
    std::vector<HomToCyclic> out;
    std::vector<std::size_t> pick(r, 0);
    for (;;) {
        HomToCyclic hom;
        hom.modulus = d;
        hom.values.assign(k->order(), 0);
        for (int x = 0; x < k->order(); ++x) {
            long v = 0;
            for (std::size_t i = 0; i < r; ++i)
                v += static_cast<long>(ab.coords[x][i]) * choices[i][pick[i]];
            hom.values[x] = static_cast<int>(v % d);
        }
        out.push_back(std::move(hom));
        std::size_t i = r;
        while (i > 0) {
            --i;
            if (++pick[i] < choices[i].size()) break;
            pick[i] = 0;
            if (i == 0) return out;
        }
        if (r == 0) return out;
    }
}

long least_primitive_root(long p) {
    if (!is_prime(p)) throw Error("p must be prime");
    if (p == 2) return 1;
    for (long g = 2; g < p; ++g) {
        bool ok = true;
        // g is primitive iff g^((p-1)/q) != 1 for every prime q | p-1
        long m = p - 1;
        for (long q = 2; q * q <= m; ++q) {
            if (m % q != 0) continue;
            while (m % q == 0) m /= q;
            long e = (p - 1) / q;
            long r = 1, b = g % p;
            while (e) {
                if (e & 1) r = r * b % p;
                b = b * b % p;
                e >>= 1;
            }
            if (r == 1) {
                ok = false;
                break;
            }
        }
        if (ok && m > 1) {
            long e = (p - 1) / m;
            long r = 1, b = g % p;
            while (e) {
                if (e & 1) r = r * b % p;
                b = b * b % p;
                e >>= 1;
            }
            if (r == 1) ok = false;
        }
        if (ok) return g;
    }
    throw Error("no primitive root found");
}

void for_each_order_mp_candidate(
    int m, long p, const Catalog& catalog,
    const std::function<bool(const GroupPtr&)>& fn) {
    if (!sylow_forced_normal(m, p))
        throw Error("Sylow argument does not apply; use a catalog for order " +
                    std::to_string(m * p));
    if (!catalog.has_order(m))
        throw CatalogError("catalog has no section for order " +
                           std::to_string(m));
    const long n = static_cast<long>(m) * p;
    if (n > 65535) throw CapExceeded("order too large for table indices");

    const long root = least_primitive_root(p);
    // powers of the primitive root mod p
    std::vector<int> rootpow(p - 1);
    long cur = 1;
    for (long i = 0; i < p - 1; ++i) {
        rootpow[i] = static_cast<int>(cur);
        cur = cur * root % p;
    }

    for (const auto& entry : catalog.entries(m)) {
        GroupPtr k = catalog.group(entry.order, entry.id);
        auto homs = hom_classes_to_cyclic(k, static_cast<int>(p - 1));
        for (std::size_t hi = 0; hi < homs.size(); ++hi) {
            const auto& hom = homs[hi];
            // (h1,k1)*(h2,k2) = (h1 + root^hom(k1) * h2 mod p, k1 k2);
            // index of (h,k) = h*m + k
            std::vector<std::uint16_t> t(static_cast<std::size_t>(n) * n);
            for (long h1 = 0; h1 < p; ++h1)
                for (int k1 = 0; k1 < m; ++k1) {
                    const long scale = rootpow[hom.values[k1]];
                    const std::size_t row = static_cast<std::size_t>(h1 * m + k1) * n;
                    for (long h2 = 0; h2 < p; ++h2) {
                        const long h = (h1 + scale * h2) % p;
                        for (int k2 = 0; k2 < m; ++k2)
                            t[row + h2 * m + k2] = static_cast<std::uint16_t>(
                                h * m + k->mul(k1, k2));
                    }
                }
            std::string label;
            bool trivial = true;
            for (int v : hom.values)
                if (v != 0) trivial = false;
            if (trivial)
                label = "C" + std::to_string(p) + " x " + k->label();
            else
                label = "C" + std::to_string(p) + " : " + k->label() + " [hom " +
                        std::to_string(hi) + "]";
            GroupPtr g = GroupTable::from_table(std::move(t), label);
            if (!fn(g)) return;
        }
    }
}

std::vector<GroupPtr> enumerate_order_mp(int m, long p, const Catalog& catalog) {
    // dedupe as candidates stream in, so only class representatives stay
    std::vector<GroupPtr> reps;
    std::vector<Fingerprint> fps;
    for_each_order_mp_candidate(m, p, catalog, [&](const GroupPtr& g) {
        Fingerprint fp = fingerprint(g);
        for (std::size_t i = 0; i < reps.size(); ++i)
            if (fps[i] == fp && are_isomorphic(reps[i], g)) return true;
        reps.push_back(g);
        fps.push_back(std::move(fp));
        return true;
    });
    return reps;
}

}  // namespace grpcover
