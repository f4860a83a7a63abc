#include "statesum/finite_group.hpp"

#include <fstream>
#include <numeric>
#include <sstream>

#include <nlohmann/json.hpp>

#include "statesum/errors.hpp"

namespace statesum {

namespace {

constexpr int kMaxOrder = 5000;

void reject_large(long long n) {
    if (n > kMaxOrder) {
        throw UnsupportedError("group order " + std::to_string(n) + " exceeds the supported cap of " +
                               std::to_string(kMaxOrder));
    }
}

int parse_positive_int(const std::string& s, const std::string& context) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
        throw MalformedInputError("bad integer '" + s + "' in " + context);
    }
    long long v = std::stoll(s);
    if (v <= 0 || v > kMaxOrder) {
        throw MalformedInputError("integer out of range in " + context);
    }
    return static_cast<int>(v);
}

}  // namespace

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<int>> table, std::string name) {
    std::size_t n = table.size();
    if (n == 0) throw MalformedInputError("empty Cayley table");
    reject_large(static_cast<long long>(n));
    for (const auto& row : table) {
        if (row.size() != n) throw MalformedInputError("Cayley table is not square");
        for (int v : row) {
            if (v < 0 || v >= static_cast<int>(n)) {
                throw MalformedInputError("Cayley table entry out of range");
            }
        }
    }

    FiniteGroup g;
    g.n_ = static_cast<int>(n);
    g.name_ = std::move(name);
    g.table_.resize(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) g.table_[i * n + j] = table[i][j];
    }

    int e = -1;
    for (std::size_t c = 0; c < n; ++c) {
        bool ok = true;
        for (std::size_t x = 0; x < n; ++x) {
            if (g.table_[c * n + x] != static_cast<int>(x) ||
                g.table_[x * n + c] != static_cast<int>(x)) {
                ok = false;
                break;
            }
        }
        if (ok) {
            e = static_cast<int>(c);
            break;
        }
    }
    if (e < 0) throw MalformedInputError("Cayley table has no identity element");
    g.identity_ = e;

    g.inverse_.assign(n, -1);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            if (g.table_[a * n + b] == e && g.table_[b * n + a] == e) {
                g.inverse_[a] = static_cast<int>(b);
                break;
            }
        }
        if (g.inverse_[a] < 0) {
            throw MalformedInputError("element " + std::to_string(a) + " has no inverse");
        }
    }

    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            int ab = g.table_[a * n + b];
            for (std::size_t c = 0; c < n; ++c) {
                int left = g.table_[static_cast<std::size_t>(ab) * n + c];
                int right = g.table_[a * n + static_cast<std::size_t>(g.table_[b * n + c])];
                if (left != right) {
                    std::ostringstream msg;
                    msg << "non-associative table at (" << a << "," << b << "," << c << ")";
                    throw MalformedInputError(msg.str());
                }
            }
        }
    }
    return g;
}

bool FiniteGroup::is_abelian() const {
    for (int a = 0; a < n_; ++a) {
        for (int b = a + 1; b < n_; ++b) {
            if (mul(a, b) != mul(b, a)) return false;
        }
    }
    return true;
}

int FiniteGroup::element_order(int a) const {
    int x = a, k = 1;
    while (x != identity_) {
        x = mul(x, a);
        ++k;
    }
    return k;
}

int FiniteGroup::conjugacy_class_count() const {
    std::vector<char> seen(static_cast<std::size_t>(n_), 0);
    int classes = 0;
    for (int a = 0; a < n_; ++a) {
        if (seen[static_cast<std::size_t>(a)]) continue;
        ++classes;
        for (int g = 0; g < n_; ++g) {
            int c = mul(mul(g, a), inv(g));
            seen[static_cast<std::size_t>(c)] = 1;
        }
    }
    return classes;
}

std::vector<int> permutation_of_rank(int n, int rank) {
    std::vector<int> pool(static_cast<std::size_t>(n));
    std::iota(pool.begin(), pool.end(), 0);
    std::vector<int> fact(static_cast<std::size_t>(n), 1);
    for (int i = 1; i < n; ++i) fact[static_cast<std::size_t>(i)] = fact[static_cast<std::size_t>(i - 1)] * i;
    std::vector<int> perm;
    int r = rank;
    for (int i = n - 1; i >= 0; --i) {
        int f = fact[static_cast<std::size_t>(i)];
        int idx = r / f;
        r %= f;
        perm.push_back(pool[static_cast<std::size_t>(idx)]);
        pool.erase(pool.begin() + idx);
    }
    return perm;
}

int rank_of_permutation(const std::vector<int>& perm) {
    int n = static_cast<int>(perm.size());
    std::vector<int> fact(static_cast<std::size_t>(n), 1);
    for (int i = 1; i < n; ++i) fact[static_cast<std::size_t>(i)] = fact[static_cast<std::size_t>(i - 1)] * i;
    int rank = 0;
    for (int i = 0; i < n; ++i) {
        int smaller = 0;
        for (int j = i + 1; j < n; ++j) {
            if (perm[static_cast<std::size_t>(j)] < perm[static_cast<std::size_t>(i)]) ++smaller;
        }
        rank += smaller * fact[static_cast<std::size_t>(n - 1 - i)];
    }
    return rank;
}

namespace {

FiniteGroup make_cyclic(int n) {
    std::vector<std::vector<int>> t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = (i + j) % n;
    }
    return FiniteGroup::from_table(std::move(t), "cyclic:" + std::to_string(n));
}

FiniteGroup make_symmetric(int n) {
    long long order = 1;
    for (int i = 2; i <= n; ++i) order *= i;
    reject_large(order);
    int N = static_cast<int>(order);
    std::vector<std::vector<int>> perms;
    perms.reserve(static_cast<std::size_t>(N));
    for (int r = 0; r < N; ++r) perms.push_back(permutation_of_rank(n, r));
    std::vector<std::vector<int>> t(static_cast<std::size_t>(N), std::vector<int>(static_cast<std::size_t>(N)));
    std::vector<int> comp(static_cast<std::size_t>(n));
    for (int a = 0; a < N; ++a) {
        for (int b = 0; b < N; ++b) {
            // (p·q)(x) = p(q(x))
            for (int x = 0; x < n; ++x) {
                comp[static_cast<std::size_t>(x)] =
                    perms[static_cast<std::size_t>(a)][static_cast<std::size_t>(
                        perms[static_cast<std::size_t>(b)][static_cast<std::size_t>(x)])];
            }
            t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = rank_of_permutation(comp);
        }
    }
    return FiniteGroup::from_table(std::move(t), "sym:" + std::to_string(n));
}

FiniteGroup make_dihedral(int n) {
    reject_large(2LL * n);
    int N = 2 * n;
    auto rot = [&](int i) { return ((i % n) + n) % n; };
    std::vector<std::vector<int>> t(static_cast<std::size_t>(N), std::vector<int>(static_cast<std::size_t>(N)));
    for (int a = 0; a < N; ++a) {
        for (int b = 0; b < N; ++b) {
            int ai = a % n, bi = b % n;
            bool ar = a >= n, br = b >= n;
            int i = ar ? rot(ai - bi) : rot(ai + bi);
            bool refl = ar != br;
            t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = refl ? n + i : i;
        }
    }
    return FiniteGroup::from_table(std::move(t), "dihedral:" + std::to_string(n));
}

FiniteGroup make_abelian(const std::vector<int>& ds, const std::string& spec) {
    long long order = 1;
    for (int d : ds) {
        order *= d;
        reject_large(order);
    }
    int N = static_cast<int>(order);
    std::size_t k = ds.size();
    auto decode = [&](int idx) {
        std::vector<int> tup(k);
        for (std::size_t i = k; i-- > 0;) {
            tup[i] = idx % ds[i];
            idx /= ds[i];
        }
        return tup;
    };
    auto encode = [&](const std::vector<int>& tup) {
        int idx = 0;
        for (std::size_t i = 0; i < k; ++i) idx = idx * ds[i] + tup[i];
        return idx;
    };
    std::vector<std::vector<int>> t(static_cast<std::size_t>(N), std::vector<int>(static_cast<std::size_t>(N)));
    for (int a = 0; a < N; ++a) {
        std::vector<int> ta = decode(a);
        for (int b = 0; b < N; ++b) {
            std::vector<int> tb = decode(b);
            std::vector<int> sum(k);
            for (std::size_t i = 0; i < k; ++i) sum[i] = (ta[i] + tb[i]) % ds[i];
            t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = encode(sum);
        }
    }
    return FiniteGroup::from_table(std::move(t), spec);
}

FiniteGroup load_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw MalformedInputError("cannot open group table file '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw MalformedInputError("bad JSON in '" + path + "': " + e.what());
    }
    if (!j.is_array()) throw MalformedInputError("group table file must hold an array of rows");
    std::vector<std::vector<int>> table;
    for (const auto& row : j) {
        if (!row.is_array()) throw MalformedInputError("group table row is not an array");
        std::vector<int> r;
        for (const auto& v : row) {
            if (!v.is_number_integer()) throw MalformedInputError("group table entry is not an integer");
            r.push_back(v.get<int>());
        }
        table.push_back(std::move(r));
    }
    return FiniteGroup::from_table(std::move(table), "table:" + path);
}

}  // namespace

FiniteGroup group_from_spec(const std::string& spec) {
    auto colon = spec.find(':');
    if (colon == std::string::npos) {
        throw MalformedInputError("unknown group spec '" + spec + "'");
    }
    std::string kind = spec.substr(0, colon);
    std::string rest = spec.substr(colon + 1);
    if (kind == "cyclic") {
        int n = parse_positive_int(rest, spec);
        FiniteGroup g = make_cyclic(n);
        g.abelian_view_ = FinAbelianGroup::from_factors({Int(n)});
        return g;
    }
    if (kind == "sym") return make_symmetric(parse_positive_int(rest, spec));
    if (kind == "dihedral") return make_dihedral(parse_positive_int(rest, spec));
    if (kind == "abelian") {
        std::vector<int> ds;
        std::stringstream ss(rest);
        std::string tok;
        while (std::getline(ss, tok, ',')) ds.push_back(parse_positive_int(tok, spec));
        if (ds.empty()) throw MalformedInputError("empty factor list in '" + spec + "'");
        FiniteGroup g = make_abelian(ds, spec);
        std::vector<Int> factors;
        for (int d : ds) factors.emplace_back(d);
        g.abelian_view_ = FinAbelianGroup::from_factors(factors);
        return g;
    }
    if (kind == "table") return load_table(rest);
    throw MalformedInputError("unknown group spec '" + spec + "'");
}

}  // namespace statesum
