#include "hmfcert/bgg.hpp"
#include "hmfcert/error.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <sstream>

namespace hmfcert::bgg {

using weights::full_set;
using weights::subset_to_string;

namespace {

long mod(long a, long p)
{
    long r = a % p;
    return r < 0 ? r + p : r;
}

int popcount(Subset J) { return std::popcount(J); }

} // namespace

TWeight kostant_weight(std::vector<long> const& n, Subset J)
{
    TWeight w;
    for (std::size_t t = 0; t < n.size(); ++t)
        w.coords.push_back((J >> t & 1U) ? -n[t] - 2 : n[t]);
    return w;
}

std::vector<std::pair<Subset, TWeight>> kostant_weights(std::vector<long> const& n, int i)
{
    int const d = static_cast<int>(n.size());
    if (i < 0 || i > d)
        raise(ErrorCode::InvalidArgument, "degree out of range");
    std::vector<std::pair<Subset, TWeight>> out;
    for (Subset J = 0; J <= full_set(d); ++J)
        if (popcount(J) == i)
            out.emplace_back(J, kostant_weight(n, J));
    return out;
}

std::vector<TWeight> omega_weights(std::vector<long> const& n, int i)
{
    int const d = static_cast<int>(n.size());
    if (i < 0 || i > d)
        raise(ErrorCode::InvalidArgument, "degree out of range");
    for (long x : n)
        if (x < 0)
            raise(ErrorCode::InvalidArgument, "n must be componentwise >= 0");
    std::vector<TWeight> out;
    for (Subset J = 0; J <= full_set(d); ++J) {
        if (popcount(J) != i)
            continue;
        std::vector<long> j(d, 0);
        for (;;) {
            TWeight w;
            for (int t = 0; t < d; ++t)
                w.coords.push_back(n[t] - 2 * j[t] - ((J >> t & 1U) ? 2 : 0));
            out.push_back(std::move(w));
            int t = 0;
            while (t < d && j[t] == n[t])
                j[t++] = 0;
            if (t == d)
                break;
            ++j[t];
        }
    }
    return out;
}

std::vector<Subset> central_char_equiv(TWeight const& mu, std::vector<long> const& n, long p)
{
    int const d = static_cast<int>(n.size());
    if (static_cast<int>(mu.coords.size()) != d)
        raise(ErrorCode::InvalidArgument, "weight length differs from d");
    std::vector<Subset> out;
    for (Subset J = 0; J <= full_set(d); ++J) {
        TWeight const k = kostant_weight(n, J);
        bool ok = true;
        for (int t = 0; t < d && ok; ++t)
            ok = mod(mu.coords[t] - k.coords[t], p) == 0;
        if (ok)
            out.push_back(J);
    }
    return out;
}

E1Table bgg_table(weights::Weight const& w, std::optional<long> p)
{
    E1Table t;
    t.d = w.d;
    auto const h = weights::hodge_multiset(w);
    t.max_i = *std::max_element(h.by_subset.begin(), h.by_subset.end());
    t.cells.assign(w.d + 1, std::vector<std::vector<Subset>>(t.max_i + 1));
    t.fil.assign(t.max_i + 1, {});
    for (Subset J = 0; J < h.by_subset.size(); ++J) {
        long const i = h.by_subset[J];
        for (int r = popcount(J); r <= w.d; ++r)
            t.cells[r][i].push_back(J);
        for (long j = 0; j <= i; ++j)
            t.fil[j].push_back(J);
    }
    if (p) {
        t.prime = p;
        long const abs_n = std::accumulate(w.n.begin(), w.n.end(), 0L);
        t.kostant_range = *p - 1 > abs_n + w.d;
    }
    return t;
}

std::string render_text(E1Table const& t)
{
    std::vector<std::vector<std::string>> grid;
    std::vector<std::string> header{"r \\ i"};
    for (long i = 0; i <= t.max_i; ++i)
        header.push_back(std::to_string(i));
    grid.push_back(header);
    for (int r = 0; r <= t.d; ++r) {
        std::vector<std::string> row{std::to_string(r)};
        for (long i = 0; i <= t.max_i; ++i) {
            std::string cell;
            for (Subset J : t.cells[r][i])
                cell += (cell.empty() ? "" : " ") + subset_to_string(J, t.d);
            row.push_back(cell.empty() ? "." : cell);
        }
        grid.push_back(row);
    }
    std::vector<std::size_t> width(grid[0].size(), 0);
    for (auto const& row : grid)
        for (std::size_t c = 0; c < row.size(); ++c)
            width[c] = std::max(width[c], row[c].size());
    std::ostringstream os;
    for (auto const& row : grid) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            os << row[c];
            if (c + 1 < row.size())
                os << std::string(width[c] - row[c].size() + 2, ' ');
        }
        os << "\n";
    }
    os << "Fil:";
    for (long i = 0; i <= t.max_i; ++i)
        os << " " << i << ":" << t.fil[i].size();
    os << "\n";
    if (t.prime)
        os << "p = " << *t.prime << ", p - 1 > |n| + d: " << (*t.kostant_range ? "yes" : "no") << "\n";
    return os.str();
}

ChandraReport chandra_check(std::vector<long> const& n, long p)
{
    ChandraReport rep;
    int const d = static_cast<int>(n.size());
    for (int i = 0; i <= d; ++i) {
        std::map<TWeight, long> mult;
        for (auto const& mu : omega_weights(n, i))
            ++mult[mu];
        std::map<TWeight, Subset> kostant;
        for (auto const& [J, k] : kostant_weights(n, i))
            kostant.emplace(k, J);
        for (auto const& [mu, count] : mult) {
            ++rep.weights_checked;
            bool const linked = !central_char_equiv(mu, n, p).empty();
            bool const is_kostant = kostant.count(mu) > 0;
            if (linked != is_kostant || (is_kostant && count != 1)) {
                std::ostringstream os;
                os << "i=" << i << " mu=(";
                for (std::size_t t = 0; t < mu.coords.size(); ++t)
                    os << (t ? "," : "") << mu.coords[t];
                os << ") linked=" << linked << " kostant=" << is_kostant << " multiplicity=" << count;
                rep.holds = false;
                rep.failure = os.str();
                return rep;
            }
        }
        if (kostant.size() != static_cast<std::size_t>(std::count_if(kostant.begin(), kostant.end(), [&](auto const& kv) {
                return mult.count(kv.first) > 0;
            }))) {
            rep.holds = false;
            rep.failure = "a Kostant weight is missing from the omega multiset";
            return rep;
        }
    }
    return rep;
}

} // namespace hmfcert::bgg
