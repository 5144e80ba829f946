#include "hbx/constructions.hpp"

#include <algorithm>
#include <numeric>

namespace hbx {

GroupTable::GroupTable(size_t n_, std::vector<std::vector<size_t>> op_)
    : n(n_), op(std::move(op_)) {
    if (n == 0 || op.size() != n)
        throw precondition_error("InvalidGroup", "table size mismatch");
    for (const auto& row : op) {
        if (row.size() != n)
            throw precondition_error("InvalidGroup", "table row size mismatch");
        for (size_t v : row)
            if (v >= n)
                throw precondition_error("InvalidGroup", "table entry out of range");
    }
    for (size_t i = 0; i < n; ++i)
        if (op[0][i] != i || op[i][0] != i)
            throw precondition_error("InvalidGroup", "element 0 is not the identity");
    for (size_t i = 0; i < n; ++i) {
        std::vector<bool> row_seen(n, false), col_seen(n, false);
        for (size_t j = 0; j < n; ++j) {
            if (row_seen[op[i][j]] || col_seen[op[j][i]])
                throw precondition_error("InvalidGroup", "table is not a latin square");
            row_seen[op[i][j]] = col_seen[op[j][i]] = true;
        }
    }
    bool has_inverse = false;
    for (size_t a = 0; a < n; ++a) {
        has_inverse = false;
        for (size_t b = 0; b < n; ++b)
            if (op[a][b] == 0 && op[b][a] == 0)
                has_inverse = true;
        if (!has_inverse)
            throw precondition_error("InvalidGroup",
                                     "element " + std::to_string(a) + " has no inverse");
    }
    for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < n; ++b)
            for (size_t c = 0; c < n; ++c)
                if (op[op[a][b]][c] != op[a][op[b][c]])
                    throw precondition_error("InvalidGroup", "table is not associative");
}

size_t GroupTable::inv(size_t a) const {
    for (size_t b = 0; b < n; ++b)
        if (op[a][b] == 0)
            return b;
    throw precondition_error("InvalidGroup", "no inverse");  // unreachable on valid tables
}

GroupTable GroupTable::cyclic(size_t n) {
    std::vector<std::vector<size_t>> op(n, std::vector<size_t>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            op[i][j] = (i + j) % n;
    return GroupTable(n, std::move(op));
}

GroupTable GroupTable::direct_product(const GroupTable& g, const GroupTable& h) {
    size_t n = g.n * h.n;
    std::vector<std::vector<size_t>> op(n, std::vector<size_t>(n));
    for (size_t a1 = 0; a1 < g.n; ++a1)
        for (size_t a2 = 0; a2 < h.n; ++a2)
            for (size_t b1 = 0; b1 < g.n; ++b1)
                for (size_t b2 = 0; b2 < h.n; ++b2)
                    op[a1 * h.n + a2][b1 * h.n + b2] =
                        g.op[a1][b1] * h.n + h.op[a2][b2];
    return GroupTable(n, std::move(op));
}

GroupTable GroupTable::symmetric3() {
    // permutations of {0,1,2} in lexicographic one-line order; index 0 is
    // the identity
    const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    auto index_of = [&](const int* p) {
        for (size_t k = 0; k < 6; ++k)
            if (perms[k][0] == p[0] && perms[k][1] == p[1] && perms[k][2] == p[2])
                return k;
        return size_t{6};
    };
    std::vector<std::vector<size_t>> op(6, std::vector<size_t>(6));
    for (size_t a = 0; a < 6; ++a)
        for (size_t b = 0; b < 6; ++b) {
            int comp[3];
            for (int x = 0; x < 3; ++x)
                comp[x] = perms[a][perms[b][x]];  // a after b
            op[a][b] = index_of(comp);
        }
    return GroupTable(6, std::move(op));
}

SkewBraceTable::SkewBraceTable(GroupTable diamond_, GroupTable circ_)
    : n(diamond_.n), diamond(std::move(diamond_)), circ(std::move(circ_)) {
    if (diamond.n != circ.n)
        throw precondition_error("InvalidSkewBrace", "operations on sets of different size");
}

namespace {

bool skew_brace_law_holds(const GroupTable& d, const GroupTable& c, size_t* witness) {
    size_t n = d.n;
    std::vector<size_t> dinv(n);
    for (size_t a = 0; a < n; ++a)
        dinv[a] = d.inv(a);
    for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < n; ++b)
            for (size_t x = 0; x < n; ++x) {
                size_t lhs = c.op[a][d.op[b][x]];
                size_t rhs = d.op[c.op[a][b]][d.op[dinv[a]][c.op[a][x]]];
                if (lhs != rhs) {
                    if (witness) {
                        witness[0] = a;
                        witness[1] = b;
                        witness[2] = x;
                        witness[3] = lhs;
                        witness[4] = rhs;
                    }
                    return false;
                }
            }
    return true;
}

}  // namespace

CheckReport check_skew_brace(const SkewBraceTable& t) {
    CheckReport rep("skew-brace");
    size_t w[5];
    if (skew_brace_law_holds(t.diamond, t.circ, w)) {
        rep.pass("skewbrace.compat");
    } else {
        Violation v;
        v.law = "skewbrace.compat";
        v.where = {w[0], w[1], w[2]};
        v.lhs = std::to_string(w[3]);
        v.rhs = std::to_string(w[4]);
        rep.fail(std::move(v));
    }
    return rep;
}

namespace {

/* Backtracking over Cayley tables with identity 0: cells filled row-major,
 * rows and columns kept latin, and associativity pruned incrementally on
 * every completed triple. */
struct GroupSearch {
    size_t n;
    std::vector<std::vector<int>> t;
    std::vector<std::vector<bool>> row_used, col_used;
    std::vector<GroupTable>* out;

    explicit GroupSearch(size_t n_, std::vector<GroupTable>* out_)
        : n(n_),
          t(n_, std::vector<int>(n_, -1)),
          row_used(n_, std::vector<bool>(n_, false)),
          col_used(n_, std::vector<bool>(n_, false)),
          out(out_) {
        for (size_t i = 0; i < n; ++i) {
            t[0][i] = int(i);  // identity row
            t[i][0] = int(i);  // identity column
            row_used[0][i] = true;
            col_used[i][i] = true;
            row_used[i][i] = true;
            col_used[0][i] = true;
        }
    }

    bool assoc_ok() const {
        for (size_t a = 1; a < n; ++a)
            for (size_t b = 1; b < n; ++b) {
                int ab = t[a][b];
                if (ab < 0)
                    continue;
                for (size_t c = 1; c < n; ++c) {
                    int bc = t[b][c];
                    if (bc < 0)
                        continue;
                    int lhs = t[size_t(ab)][c];
                    int rhs = t[a][size_t(bc)];
                    if (lhs >= 0 && rhs >= 0 && lhs != rhs)
                        return false;
                }
            }
        return true;
    }

    void fill(size_t i, size_t j) {
        if (i == n) {
            std::vector<std::vector<size_t>> op(n, std::vector<size_t>(n));
            for (size_t a = 0; a < n; ++a)
                for (size_t b = 0; b < n; ++b)
                    op[a][b] = size_t(t[a][b]);
            out->push_back(GroupTable(n, std::move(op)));
            return;
        }
        size_t ni = j + 1 == n ? i + 1 : i;
        size_t nj = j + 1 == n ? 1 : j + 1;
        for (size_t v = 0; v < n; ++v) {
            if (row_used[i][v] || col_used[j][v])
                continue;
            t[i][j] = int(v);
            row_used[i][v] = col_used[j][v] = true;
            if (assoc_ok())
                fill(ni, nj);
            row_used[i][v] = col_used[j][v] = false;
            t[i][j] = -1;
        }
    }
};

std::vector<size_t> flatten_pair(const SkewBraceTable& s) {
    std::vector<size_t> key;
    key.reserve(2 * s.n * s.n);
    for (const auto& row : s.diamond.op)
        key.insert(key.end(), row.begin(), row.end());
    for (const auto& row : s.circ.op)
        key.insert(key.end(), row.begin(), row.end());
    return key;
}

}  // namespace

std::vector<GroupTable> enumerate_group_tables(size_t n) {
    std::vector<GroupTable> out;
    if (n == 1) {
        out.push_back(GroupTable(1, {{0}}));
        return out;
    }
    GroupSearch search(n, &out);
    search.fill(1, 1);
    return out;
}

SkewBraceCensus enumerate_skew_braces(size_t n, bool up_to_iso) {
    if (n == 0 || n > 8)
        throw precondition_error("OrderTooLarge", "order must be in 1..8");
    SkewBraceCensus census;
    census.order = n;
    census.up_to_iso = up_to_iso;

    std::vector<GroupTable> groups = enumerate_group_tables(n);
    for (const auto& d : groups)
        for (const auto& c : groups)
            if (skew_brace_law_holds(d, c, nullptr))
                census.structures.push_back(SkewBraceTable(d, c));
    census.labeled_count = census.structures.size();

    if (up_to_iso) {
        // orbit of simultaneous relabelling by permutations fixing 0
        std::vector<size_t> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::vector<std::vector<size_t>> perms;
        do {
            perms.push_back(perm);
        } while (std::next_permutation(perm.begin() + 1, perm.end()));

        auto relabel_into = [&](const GroupTable& g, const std::vector<size_t>& p,
                                const std::vector<size_t>& pinv, std::vector<size_t>& key) {
            for (size_t a = 0; a < n; ++a)
                for (size_t b = 0; b < n; ++b)
                    key.push_back(p[g.op[pinv[a]][pinv[b]]]);
        };

        std::vector<SkewBraceTable> reps;
        std::vector<std::vector<size_t>> seen_keys;
        std::vector<size_t> pinv(n), image;
        for (const auto& s : census.structures) {
            std::vector<size_t> self = flatten_pair(s);
            std::vector<size_t> canon = self;
            for (const auto& p : perms) {
                for (size_t i = 0; i < n; ++i)
                    pinv[p[i]] = i;
                image.clear();
                relabel_into(s.diamond, p, pinv, image);
                relabel_into(s.circ, p, pinv, image);
                if (image < canon)
                    canon = image;
            }
            if (std::find(seen_keys.begin(), seen_keys.end(), canon) == seen_keys.end()) {
                seen_keys.push_back(canon);
                if (canon == self)
                    reps.push_back(s);
            }
        }
        census.iso_count = seen_keys.size();
        census.structures = std::move(reps);
    }
    return census;
}

HopfData group_algebra(const GroupTable& g, const FieldSpec& field) {
    FinObject obj(g.n, BraidSpec::swap(field));
    Scalar one = Scalar::one(field);
    FinObject k = FinObject::unit(obj.braid());

    MatrixBuilder unit(obj, k);
    unit.at(0, 0) = one;
    MatrixBuilder mult(obj, tensor(obj, obj));
    for (size_t a = 0; a < g.n; ++a)
        for (size_t b = 0; b < g.n; ++b)
            mult.at(g.op[a][b], a * g.n + b) = one;
    MatrixBuilder counit(k, obj);
    for (size_t a = 0; a < g.n; ++a)
        counit.at(0, a) = one;
    MatrixBuilder comult(tensor(obj, obj), obj);
    for (size_t a = 0; a < g.n; ++a)
        comult.at(a * g.n + a, a) = one;
    MatrixBuilder antipode(obj, obj);
    for (size_t a = 0; a < g.n; ++a)
        antipode.at(g.inv(a), a) = one;

    return HopfData(obj, Morphism(obj, k, unit.take()),
                    Morphism(obj, tensor(obj, obj), mult.take()),
                    Morphism(k, obj, counit.take()),
                    Morphism(tensor(obj, obj), obj, comult.take()),
                    Morphism(obj, obj, antipode.take()));
}

HopfBraceData linearize_skew_brace(const SkewBraceTable& t, const FieldSpec& field) {
    if (!check_skew_brace(t).passed())
        throw precondition_error("InvalidSkewBrace", "compatibility law fails");
    HopfData h1 = group_algebra(t.diamond, field);
    HopfData h2 = group_algebra(t.circ, field);
    return HopfBraceData(h1.obj, h1.counit, h1.comult, h1.unit, h1.mult, h1.antipode, h2.unit,
                         h2.mult, h2.antipode);
}

HopfData super_exterior_line(const FieldSpec& field) {
    if (field.characteristic() == 2)
        throw precondition_error("CharTwo", "the sign braiding needs characteristic != 2");
    BraidSpec braid = BraidSpec::sign(field);
    FinObject obj(2, {0, 1}, braid);
    FinObject k = FinObject::unit(braid);
    Scalar one = Scalar::one(field);

    MatrixBuilder unit(obj, k);
    unit.at(0, 0) = one;
    MatrixBuilder mult(obj, tensor(obj, obj));
    mult.at(0, 0) = one;  // 1*1
    mult.at(1, 1) = one;  // 1*x
    mult.at(1, 2) = one;  // x*1, x*x = 0
    MatrixBuilder counit(k, obj);
    counit.at(0, 0) = one;
    MatrixBuilder comult(tensor(obj, obj), obj);
    comult.at(0, 0) = one;  // 1 -> 1(x)1
    comult.at(1, 1) = one;  // x -> x(x)1 + 1(x)x
    comult.at(2, 1) = one;
    MatrixBuilder antipode(obj, obj);
    antipode.at(0, 0) = one;
    antipode.at(1, 1) = -one;

    return HopfData(obj, Morphism(obj, k, unit.take()),
                    Morphism(obj, tensor(obj, obj), mult.take()),
                    Morphism(k, obj, counit.take()),
                    Morphism(tensor(obj, obj), obj, comult.take()),
                    Morphism(obj, obj, antipode.take()));
}

namespace {

bool primitive_root(const Scalar& q, uint32_t n) {
    Scalar one = Scalar::one(q.field());
    if (!(q.pow(n) == one))
        return false;
    for (uint32_t k = 1; k < n; ++k)
        if (q.pow(k) == one)
            return false;
    return true;
}

}  // namespace

HopfData braided_line(uint32_t n, const FieldSpec& field, const Scalar& q) {
    if (n < 2)
        throw precondition_error("NoPrimitiveRoot", "need n >= 2");
    if (!primitive_root(q, n))
        throw precondition_error("NoPrimitiveRoot",
                                 q.str() + " is not a primitive root of order " +
                                     std::to_string(n) + " in " + field.str());
    BraidSpec braid = BraidSpec::bicharacter(n, q);
    std::vector<uint32_t> grading(n);
    for (uint32_t i = 0; i < n; ++i)
        grading[i] = i;
    FinObject obj(n, grading, braid);
    FinObject k = FinObject::unit(braid);
    Scalar one = Scalar::one(field), zero = Scalar::zero(field);

    MatrixBuilder unit_b(obj, k);
    unit_b.at(0, 0) = one;
    Morphism unit(obj, k, unit_b.take());
    MatrixBuilder mult_b(obj, tensor(obj, obj));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (i + j < n)
                mult_b.at(i + j, i * n + j) = one;
    Morphism mult(obj, tensor(obj, obj), mult_b.take());
    MatrixBuilder counit_b(k, obj);
    counit_b.at(0, 0) = one;
    Morphism counit(k, obj, counit_b.take());

    // comultiplication generated from x -> x(x)1 + 1(x)x through the
    // braided tensor-algebra multiplication
    AlgebraData hh =
        tensor_algebra(AlgebraData(obj, unit, mult), AlgebraData(obj, unit, mult));
    std::vector<std::vector<Scalar>> delta(n, std::vector<Scalar>(n * n, zero));
    delta[0][0] = one;
    std::vector<Scalar> dx(n * n, zero);
    dx[1 * n + 0] = one;  // x(x)1
    dx[0 * n + 1] = one;  // 1(x)x
    delta[1] = dx;
    for (size_t p = 2; p < n; ++p) {
        // delta(x^p) = mult_{HH}(delta(x^(p-1)) (x) delta(x))
        std::vector<Scalar> acc(n * n, zero);
        for (size_t u = 0; u < size_t{n} * n; ++u) {
            if (delta[p - 1][u].is_zero())
                continue;
            for (size_t v = 0; v < size_t{n} * n; ++v) {
                if (dx[v].is_zero())
                    continue;
                Scalar coeff = delta[p - 1][u] * dx[v];
                for (size_t w = 0; w < size_t{n} * n; ++w) {
                    const Scalar& m = hh.mult.at(w, u * n * n + v);
                    if (!m.is_zero())
                        acc[w] = acc[w] + m * coeff;
                }
            }
        }
        delta[p] = std::move(acc);
    }
    MatrixBuilder comult_b(tensor(obj, obj), obj);
    for (size_t p = 0; p < n; ++p)
        for (size_t w = 0; w < size_t{n} * n; ++w)
            comult_b.at(w, p) = delta[p][w];
    Morphism comult(tensor(obj, obj), obj, comult_b.take());

    Morphism antipode = solve_antipode(obj, unit, mult, counit, comult);
    return HopfData(obj, unit, mult, counit, comult, antipode);
}

HopfData braided_line(uint32_t n, const FieldSpec& field) {
    if (field.is_prime_field()) {
        for (uint32_t c = 2; c < field.p; ++c) {
            Scalar q = Scalar::of_int(c, field);
            if (primitive_root(q, n))
                return braided_line(n, field, q);
        }
    } else if (n == 2) {
        return braided_line(n, field, -Scalar::one(field));
    }
    throw precondition_error("NoPrimitiveRoot", "no primitive root of order " +
                                                    std::to_string(n) + " in " + field.str());
}

Morphism solve_antipode(const FinObject& obj, const Morphism& unit, const Morphism& mult,
                        const Morphism& counit, const Morphism& comult) {
    size_t d = obj.dim();
    const FieldSpec& field = obj.field();
    Scalar zero = Scalar::zero(field);

    // unknowns: entries lam[a][u] with deg a = deg u
    std::vector<std::pair<size_t, size_t>> vars;
    for (size_t a = 0; a < d; ++a)
        for (size_t u = 0; u < d; ++u)
            if (obj.degree(a) == obj.degree(u))
                vars.emplace_back(a, u);
    size_t nv = vars.size();
    std::vector<size_t> var_index(d * d, SIZE_MAX);
    for (size_t v = 0; v < nv; ++v)
        var_index[vars[v].first * d + vars[v].second] = v;

    // conv(lam, id) = unit . counit, entry (t, j):
    //   sum_{u,v} comult[(u,v)][j] * sum_a lam[a][u] * mult[t][(a,v)]
    Morphism target = compose(unit, counit);
    std::vector<std::vector<Scalar>> rows;
    std::vector<Scalar> rhs;
    for (size_t j = 0; j < d; ++j) {
        for (size_t t = 0; t < d; ++t) {
            std::vector<Scalar> row(nv, zero);
            for (size_t u = 0; u < d; ++u)
                for (size_t v = 0; v < d; ++v) {
                    const Scalar& dc = comult.at(u * d + v, j);
                    if (dc.is_zero())
                        continue;
                    for (size_t a = 0; a < d; ++a) {
                        size_t vi = var_index[a * d + u];
                        if (vi == SIZE_MAX)
                            continue;
                        const Scalar& mv = mult.at(t, a * d + v);
                        if (!mv.is_zero())
                            row[vi] = row[vi] + dc * mv;
                    }
                }
            rows.push_back(std::move(row));
            rhs.push_back(target.at(t, j));
        }
    }

    // Gauss elimination; the antipode is a convolution inverse, so the
    // system must pin every unknown uniquely
    size_t ne = rows.size();
    std::vector<size_t> pivot_of(nv, SIZE_MAX);
    size_t rank = 0;
    for (size_t col = 0; col < nv && rank < ne; ++col) {
        size_t p = rank;
        while (p < ne && rows[p][col].is_zero())
            ++p;
        if (p == ne)
            continue;
        std::swap(rows[p], rows[rank]);
        std::swap(rhs[p], rhs[rank]);
        Scalar inv = rows[rank][col].inverse();
        for (size_t c2 = 0; c2 < nv; ++c2)
            rows[rank][c2] = rows[rank][c2] * inv;
        rhs[rank] = rhs[rank] * inv;
        for (size_t r2 = 0; r2 < ne; ++r2) {
            if (r2 == rank || rows[r2][col].is_zero())
                continue;
            Scalar f = rows[r2][col];
            for (size_t c2 = 0; c2 < nv; ++c2)
                rows[r2][c2] = rows[r2][c2] - f * rows[rank][c2];
            rhs[r2] = rhs[r2] - f * rhs[rank];
        }
        pivot_of[col] = rank;
        ++rank;
    }
    for (size_t r2 = rank; r2 < ne; ++r2)
        if (!rhs[r2].is_zero())
            throw precondition_error("NoAntipode", "convolution system is inconsistent");
    for (size_t v = 0; v < nv; ++v)
        if (pivot_of[v] == SIZE_MAX)
            throw precondition_error("NoAntipode", "convolution system is underdetermined");

    MatrixBuilder lam(obj, obj);
    for (size_t v = 0; v < nv; ++v)
        lam.at(vars[v].first, vars[v].second) = rhs[pivot_of[v]];
    return Morphism(obj, obj, lam.take());
}

Catalog catalog() {
    Catalog cat;
    FieldSpec q = FieldSpec::rationals();
    FieldSpec f5 = FieldSpec::prime(5);
    FieldSpec f7 = FieldSpec::prime(7);

    const std::pair<const char*, GroupTable> groups[] = {
        {"C1", GroupTable::cyclic(1)},
        {"C2", GroupTable::cyclic(2)},
        {"C3", GroupTable::cyclic(3)},
        {"C4", GroupTable::cyclic(4)},
        {"C2xC2", GroupTable::direct_product(GroupTable::cyclic(2), GroupTable::cyclic(2))},
        {"S3", GroupTable::symmetric3()},
    };
    const std::pair<const char*, FieldSpec> fields[] = {{"Q", q}, {"F5", f5}, {"F7", f7}};

    for (const auto& [fname, field] : fields)
        for (const auto& [gname, table] : groups)
            cat.hopfs.push_back(NamedHopf{std::string("hopf/") + fname + "/" + gname,
                                          group_algebra(table, field)});
    cat.hopfs.push_back(NamedHopf{"hopf/Q/super_line", super_exterior_line(q)});
    cat.hopfs.push_back(
        NamedHopf{"hopf/F7/braided_line3", braided_line(3, f7, Scalar::of_int(2, f7))});

    for (const auto& [name, h] : cat.hopfs)
        cat.braces.push_back(NamedBrace{"brace/trivial(" + name + ")", trivial_brace(h)});

    for (size_t n = 1; n <= 6; ++n) {
        SkewBraceCensus census = enumerate_skew_braces(n, true);
        for (size_t i = 0; i < census.structures.size(); ++i) {
            std::string stem =
                "skew" + std::to_string(n) + "#" + std::to_string(i);
            cat.braces.push_back(
                NamedBrace{"brace/Q/" + stem,
                           linearize_skew_brace(census.structures[i], q)});
            cat.braces.push_back(
                NamedBrace{"brace/F7/" + stem,
                           linearize_skew_brace(census.structures[i], f7)});
        }
    }

    for (const auto& [name, h] : cat.hopfs)
        cat.cocycles.push_back(
            NamedCocycle{"cocycle/trivial(" + name + ")", trivial_cocycle(h)});
    for (const auto& [name, hb] : cat.braces) {
        if (name.rfind("brace/trivial", 0) == 0)
            continue;  // cocycles of trivial braces equal the trivial cocycles
        cat.cocycles.push_back(
            NamedCocycle{"cocycle/from(" + name + ")", cocycle_from_brace(hb)});
    }

    for (const auto& [name, h] : cat.hopfs) {
        cat.modules.push_back(
            NamedModule{"module/regular(" + name + ")", regular_module(h.algebra()), h});
        cat.modules.push_back(NamedModule{
            "module/trivial(" + name + ")",
            trivial_module(h, FinObject::unit(h.obj.braid())), h});
    }
    for (const auto& [name, hb] : cat.braces) {
        cat.brace_modules.push_back(
            NamedBraceModule{"bmodule/regular(" + name + ")", regular_brace_module(hb)});
        cat.brace_modules.push_back(
            NamedBraceModule{"bmodule/trivial(" + name + ")", trivial_brace_module(hb)});
    }
    for (const auto& [name, c] : cat.cocycles) {
        cat.cocycle_modules.push_back(
            NamedCocycleModule{"cmodule/regular(" + name + ")", regular_cocycle_module(c)});
        cat.cocycle_modules.push_back(
            NamedCocycleModule{"cmodule/trivial(" + name + ")", trivial_cocycle_module(c)});
    }
    return cat;
}

}  // namespace hbx
