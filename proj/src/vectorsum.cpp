#include <algorithm>
#include <functional>
#include <istream>
#include <map>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <unordered_map>

#include "sqcol/errors.hpp"
#include "sqcol/generators.hpp"

namespace sqcol {

namespace {

long ipow(long b, int e) {
    long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

struct VecHash {
    std::size_t operator()(const IntVector& v) const {
        std::size_t h = 1469598103934665603ull;
        for (long x : v) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ull;
        return h;
    }
};

}  // namespace

std::vector<int> nonzero_dims(const VectorKSumInstance& inst, int list) {
    std::vector<int> d = inst.pos_dims[list];
    d.insert(d.end(), inst.neg_dims[list].begin(), inst.neg_dims[list].end());
    std::sort(d.begin(), d.end());
    return d;
}

std::array<long, 3> nonzero_part(const IntVector& a, const std::vector<int>& dims) {
    if (dims.size() != 3) throw input_error("a node-representing list has exactly three non-zero dimensions");
    return {a[dims[0]], a[dims[1]], a[dims[2]]};
}

std::vector<std::string> restricted_form_problems(const VectorKSumInstance& inst) {
    std::vector<std::string> out;
    const int k = inst.k();
    if (inst.n < 1) out.push_back("n must be positive");
    if (inst.m < 1) out.push_back("m must be positive");
    if (static_cast<int>(inst.pos_dims.size()) != k || static_cast<int>(inst.neg_dims.size()) != k) {
        out.push_back("dimension sets do not match the number of lists");
        return out;
    }
    if (!out.empty()) return out;
    const long n2 = ipow(inst.n, 2);
    const long n4 = ipow(inst.n, 4);
    std::vector<int> uses(inst.m, 0);
    for (int i = 0; i < k; ++i) {
        const std::string li = "list " + std::to_string(i + 1);
        if (static_cast<long>(inst.lists[i].size()) != n4)
            out.push_back(li + " has " + std::to_string(inst.lists[i].size()) + " vectors, expected " +
                          std::to_string(n4));
        std::vector<int> sign(inst.m, 0);
        bool dims_ok = true;
        for (int d : inst.pos_dims[i]) {
            if (d < 0 || d >= inst.m) dims_ok = false;
            else sign[d] += 1;
        }
        for (int d : inst.neg_dims[i]) {
            if (d < 0 || d >= inst.m) dims_ok = false;
            else sign[d] -= 2;
        }
        int nz = 0;
        for (int d = 0; d < inst.m; ++d) {
            if (sign[d] != 0 && sign[d] != 1 && sign[d] != -2) dims_ok = false;
            if (sign[d] != 0) {
                ++nz;
                ++uses[d];
            }
        }
        if (!dims_ok) out.push_back(li + " has out-of-range or overlapping dimension sets");
        if (nz != 3) out.push_back(li + " has " + std::to_string(nz) + " non-zero dimensions, expected 3");
        for (std::size_t j = 0; j < inst.lists[i].size(); ++j) {
            const auto& a = inst.lists[i][j];
            if (static_cast<int>(a.size()) != inst.m) {
                out.push_back(li + " vector " + std::to_string(j + 1) + " has the wrong length");
                continue;
            }
            for (int d = 0; d < inst.m; ++d) {
                bool ok = true;
                if (sign[d] == 0) ok = a[d] == 0;
                else if (sign[d] == 1) ok = a[d] >= 1 && a[d] <= n2;
                else if (sign[d] == -2) ok = a[d] <= -1 && a[d] >= -n2;
                if (!ok) {
                    out.push_back(li + " vector " + std::to_string(j + 1) + " entry " + std::to_string(d + 1) +
                                  " = " + std::to_string(a[d]) + " breaks the sign pattern");
                    break;
                }
            }
        }
    }
    for (int d = 0; d < inst.m; ++d)
        if (uses[d] != 2)
            out.push_back("dimension " + std::to_string(d + 1) + " is non-zero in " + std::to_string(uses[d]) +
                          " lists, expected 2");
    return out;
}

std::optional<std::vector<int>> solve_vector_ksum(const VectorKSumInstance& inst, std::size_t max_states) {
    const int k = inst.k();
    if (k == 0) return std::vector<int>{};
    for (const auto& l : inst.lists)
        if (l.empty()) return std::nullopt;
    const int half = k / 2;
    // Left half: every partial sum with one witness index tuple.
    std::unordered_map<IntVector, std::vector<int>, VecHash> left;
    std::size_t states = 0;
    std::vector<int> pick(k, 0);
    IntVector sum(inst.m, 0);
    std::function<void(int)> enum_left = [&](int i) {
        if (i == half) {
            if (++states > max_states) throw resource_error("vector k-sum enumeration exceeds its budget");
            left.emplace(sum, std::vector<int>(pick.begin(), pick.begin() + half));
            return;
        }
        for (std::size_t j = 0; j < inst.lists[i].size(); ++j) {
            pick[i] = static_cast<int>(j);
            for (int d = 0; d < inst.m; ++d) sum[d] += inst.lists[i][j][d];
            enum_left(i + 1);
            for (int d = 0; d < inst.m; ++d) sum[d] -= inst.lists[i][j][d];
        }
    };
    enum_left(0);
    std::optional<std::vector<int>> found;
    std::fill(sum.begin(), sum.end(), 0);
    std::function<void(int)> enum_right = [&](int i) {
        if (found) return;
        if (i == k) {
            if (++states > max_states) throw resource_error("vector k-sum enumeration exceeds its budget");
            IntVector neg(inst.m);
            for (int d = 0; d < inst.m; ++d) neg[d] = -sum[d];
            auto it = left.find(neg);
            if (it != left.end()) {
                std::vector<int> res = it->second;
                res.insert(res.end(), pick.begin() + half, pick.end());
                found = res;
            }
            return;
        }
        for (std::size_t j = 0; j < inst.lists[i].size() && !found; ++j) {
            pick[i] = static_cast<int>(j);
            for (int d = 0; d < inst.m; ++d) sum[d] += inst.lists[i][j][d];
            enum_right(i + 1);
            for (int d = 0; d < inst.m; ++d) sum[d] -= inst.lists[i][j][d];
        }
    };
    enum_right(half);
    return found;
}

std::vector<std::string> subiso_problems(const ColoredSubIsoInstance& inst) {
    std::vector<std::string> out;
    const int k = inst.pattern.n();
    for (int h = 0; h < k; ++h)
        if (inst.pattern.degree(h) != 3) out.push_back("pattern vertex " + std::to_string(h + 1) + " is not of degree 3");
    if (inst.n < 1) out.push_back("n must be positive");
    if (inst.host.n() != k * inst.n) out.push_back("host must have k*n vertices");
    if (static_cast<int>(inst.fiber.size()) != inst.host.n()) {
        out.push_back("fiber map has the wrong size");
        return out;
    }
    std::vector<int> size(k, 0);
    for (int f : inst.fiber) {
        if (f < 0 || f >= k) {
            out.push_back("fiber map points outside the pattern");
            return out;
        }
        ++size[f];
    }
    for (int h = 0; h < k; ++h)
        if (size[h] != inst.n) out.push_back("fiber of pattern vertex " + std::to_string(h + 1) + " has size " +
                                             std::to_string(size[h]));
    return out;
}

VectorKSumInstance gen_subiso_to_vectorsum(const ColoredSubIsoInstance& inst) {
    if (auto p = subiso_problems(inst); !p.empty()) throw input_error(p.front());
    const Graph& H = inst.pattern;
    const Graph& G = inst.host;
    const int k = H.n();
    const auto pedges = H.edges();
    std::map<Edge, int> dim_of;
    for (std::size_t i = 0; i < pedges.size(); ++i) dim_of[pedges[i]] = static_cast<int>(i);
    std::vector<std::vector<int>> fib(k);
    for (int v = 0; v < G.n(); ++v) fib[inst.fiber[v]].push_back(v);
    // Host edges between two fibers numbered 1, 2, ... in lexicographic order.
    std::map<Edge, long> code;
    {
        std::map<Edge, long> next;
        for (auto [u, v] : G.edges()) {
            int a = inst.fiber[u], b = inst.fiber[v];
            if (a == b || !H.adjacent(a, b)) continue;
            Edge key = a < b ? Edge{a, b} : Edge{b, a};
            code[{u, v}] = code[{v, u}] = ++next[key];
        }
    }
    VectorKSumInstance out;
    out.n = inst.n;
    out.m = static_cast<int>(pedges.size());
    out.lists.resize(k);
    out.pos_dims.resize(k);
    out.neg_dims.resize(k);
    bool empty_list = false;
    for (int h0 = 0; h0 < k; ++h0) {
        std::vector<int> nb = H.neighbors(h0);
        std::sort(nb.begin(), nb.end());
        std::array<int, 3> dim{};
        std::array<long, 3> sign{};
        for (int i = 0; i < 3; ++i) {
            dim[i] = dim_of.at(h0 < nb[i] ? Edge{h0, nb[i]} : Edge{nb[i], h0});
            sign[i] = h0 < nb[i] ? 1 : -1;
            (sign[i] > 0 ? out.pos_dims : out.neg_dims)[h0].push_back(dim[i]);
        }
        std::sort(out.pos_dims[h0].begin(), out.pos_dims[h0].end());
        std::sort(out.neg_dims[h0].begin(), out.neg_dims[h0].end());
        for (int v0 : fib[h0])
            for (int v1 : fib[nb[0]])
                for (int v2 : fib[nb[1]])
                    for (int v3 : fib[nb[2]]) {
                        const std::array<int, 3> vs{v1, v2, v3};
                        IntVector a(out.m, 0);
                        bool ok = true;
                        for (int i = 0; i < 3 && ok; ++i) {
                            auto it = code.find({v0, vs[i]});
                            if (it == code.end()) ok = false;
                            else a[dim[i]] = sign[i] * it->second;
                        }
                        if (ok) out.lists[h0].push_back(std::move(a));
                    }
        if (out.lists[h0].empty()) empty_list = true;
    }
    if (empty_list) {
        // Every list keeps its dimensions but all of them turn positive, so no sum vanishes.
        out.trivial_no = true;
        for (int h0 = 0; h0 < k; ++h0) {
            auto d = nonzero_dims(out, h0);
            out.pos_dims[h0] = d;
            out.neg_dims[h0].clear();
            IntVector a(out.m, 0);
            for (int x : d) a[x] = 1;
            out.lists[h0].assign(1, a);
        }
    }
    const std::size_t n4 = static_cast<std::size_t>(ipow(inst.n, 4));
    for (auto& l : out.lists)
        while (l.size() < n4) l.push_back(l.front());
    return out;
}

bool solve_colored_subiso(const ColoredSubIsoInstance& inst) {
    if (auto p = subiso_problems(inst); !p.empty()) throw input_error(p.front());
    const int k = inst.pattern.n();
    std::vector<std::vector<int>> fib(k);
    for (int v = 0; v < inst.host.n(); ++v) fib[inst.fiber[v]].push_back(v);
    std::vector<int> phi(k, -1);
    std::function<bool(int)> rec = [&](int h) {
        if (h == k) return true;
        for (int v : fib[h]) {
            bool ok = true;
            for (int h2 : inst.pattern.neighbors(h))
                if (h2 < h && !inst.host.adjacent(v, phi[h2])) ok = false;
            if (!ok) continue;
            phi[h] = v;
            if (rec(h + 1)) return true;
        }
        return false;
    };
    return rec(0);
}

ColoredSubIsoInstance random_subiso_instance(int k, int n, double p, std::uint64_t seed) {
    if (k < 4 || k % 2 != 0) throw input_error("a cubic pattern needs an even k >= 4");
    if (n < 1) throw input_error("n must be positive");
    std::mt19937_64 rng(seed);
    ColoredSubIsoInstance out;
    out.n = n;
    // Pairing model, retried until the pattern is simple.
    for (;;) {
        std::vector<int> stubs;
        for (int v = 0; v < k; ++v) stubs.insert(stubs.end(), 3, v);
        std::shuffle(stubs.begin(), stubs.end(), rng);
        Graph h(k);
        bool simple = true;
        for (std::size_t i = 0; i < stubs.size() && simple; i += 2)
            simple = stubs[i] != stubs[i + 1] && h.add_edge(stubs[i], stubs[i + 1]);
        if (simple) {
            out.pattern = h;
            break;
        }
    }
    out.host = Graph(k * n);
    out.fiber.resize(k * n);
    for (int v = 0; v < k * n; ++v) out.fiber[v] = v / n;
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (auto [a, b] : out.pattern.edges())
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (coin(rng) < p) out.host.add_edge(a * n + i, b * n + j);
    return out;
}

void write_vectorsum(std::ostream& out, const VectorKSumInstance& inst, const std::vector<std::string>& comments) {
    for (const auto& c : comments) out << "c " << c << '\n';
    out << "p vsum " << inst.k() << ' ' << inst.m << ' ' << inst.n << '\n';
    for (int i = 0; i < inst.k(); ++i) {
        out << "l " << i + 1 << " +";
        for (int d : inst.pos_dims[i]) out << ' ' << d + 1;
        out << " -";
        for (int d : inst.neg_dims[i]) out << ' ' << d + 1;
        out << '\n';
        for (const auto& a : inst.lists[i]) {
            out << "v " << i + 1;
            for (long x : a) out << ' ' << x;
            out << '\n';
        }
    }
}

VectorKSumInstance read_vectorsum(std::istream& in) {
    VectorKSumInstance inst;
    std::string line;
    int line_no = 0;
    bool header = false;
    auto fail = [&](const std::string& what) { throw input_error("line " + std::to_string(line_no) + ": " + what); };
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok) || tok == "c") continue;
        if (tok == "p") {
            std::string kind;
            int k = 0;
            if (header || !(ls >> kind >> k >> inst.m >> inst.n) || kind != "vsum" || k < 0 || inst.m < 0)
                fail("bad header");
            inst.lists.assign(k, {});
            inst.pos_dims.assign(k, {});
            inst.neg_dims.assign(k, {});
            header = true;
            continue;
        }
        if (!header) fail("data before header");
        int i = 0;
        if (!(ls >> i) || i < 1 || i > inst.k()) fail("bad list index");
        --i;
        if (tok == "l") {
            std::vector<int>* dst = nullptr;
            std::string t;
            while (ls >> t) {
                if (t == "+") dst = &inst.pos_dims[i];
                else if (t == "-") dst = &inst.neg_dims[i];
                else {
                    int d = 0;
                    try {
                        d = std::stoi(t);
                    } catch (const std::exception&) {
                        fail("bad dimension '" + t + "'");
                    }
                    if (!dst || d < 1 || d > inst.m) fail("bad dimension '" + t + "'");
                    dst->push_back(d - 1);
                }
            }
            std::sort(inst.pos_dims[i].begin(), inst.pos_dims[i].end());
            std::sort(inst.neg_dims[i].begin(), inst.neg_dims[i].end());
        } else if (tok == "v") {
            IntVector a(inst.m);
            for (auto& x : a)
                if (!(ls >> x)) fail("vector too short");
            long extra;
            if (ls >> extra) fail("vector too long");
            inst.lists[i].push_back(std::move(a));
        } else {
            fail("unknown line type '" + tok + "'");
        }
    }
    if (!header) throw input_error("missing header line");
    return inst;
}

}  // namespace sqcol
