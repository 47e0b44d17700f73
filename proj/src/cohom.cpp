#include "conformal/cohom.hpp"

#include "conformal/config.hpp"

#include <algorithm>

namespace conformal {

namespace {

const Var PD = Var::partial();

Poly lam(int i) { return Poly::lambda(i); }

std::vector<std::vector<int>> all_tuples(int rank, int len) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(len, 0);
    if (len == 0) {
        out.push_back(cur);
        return out;
    }
    while (true) {
        out.push_back(cur);
        int p = len - 1;
        while (p >= 0 && cur[p] == rank - 1) cur[p--] = 0;
        if (p < 0) break;
        ++cur[p];
    }
    return out;
}

int fresh_above(const Cochain& g, const std::vector<Poly>& extra) {
    int k = std::max(1, g.degree);
    for (const auto& [t, v] : g.values) k = std::max(k, v.max_lambda_index());
    for (const auto& p : extra) k = std::max(k, p.max_lambda_index());
    return k + 1;
}

} // namespace

ModElem Cochain::value_at(const std::vector<int>& tuple) const {
    auto it = values.find(tuple);
    if (it != values.end()) return it->second;
    return ModElem(left.module);
}

Cochain Cochain::zero(int degree, const BracketTable& alg, const ActionTable& left) {
    Cochain g;
    g.degree = degree;
    g.algebra = alg;
    g.left = left;
    return g;
}

ModElem cochain_eval(const Cochain& g, const std::vector<ModElem>& args,
                     const std::vector<Poly>& slots) {
    const int n = g.degree;
    if ((int)args.size() != n) throw engine_error("cochain_eval: wrong argument count");
    if ((int)slots.size() != std::max(0, n - 1))
        throw engine_error("cochain_eval: wrong slot count");
    if (n == 0) return g.value_at({});

    const int ralg = g.algebra.module->rank();
    for (const auto& a : args)
        if (a.module() != g.algebra.module)
            throw engine_error("cochain_eval: argument module mismatch");

    // Coefficient rules: slot s < n: D -> -slots[s]; last slot: D -> D + sum.
    Poly sum;
    for (const auto& s : slots) sum += s;
    std::vector<std::vector<Poly>> coeff(n);   // per argument, per basis index
    for (int s = 0; s < n; ++s) {
        coeff[s].resize(ralg);
        for (int b = 0; b < ralg; ++b) {
            const Poly& c = args[s].comp(b);
            if (c.is_zero()) continue;
            coeff[s][b] = s < n - 1 ? c.substitute(PD, -slots[s])
                                    : c.substitute(PD, Poly::partial() + sum);
        }
    }

    // Rename stored lambdas to the slot expressions through fresh temporaries.
    int fresh = fresh_above(g, slots);
    std::vector<std::pair<Var, Poly>> rename, fill;
    for (int s = 0; s < n - 1; ++s) {
        Var tmp = Var::lambda(fresh + s);
        rename.push_back({Var::lambda(s + 1), Poly::variable(tmp)});
        fill.push_back({tmp, slots[s]});
    }

    ModElem out(g.left.module);
    std::vector<int> tuple(n, 0);
    while (true) {
        Poly prod = Poly::constant(rat(1));
        bool zero = false;
        for (int s = 0; s < n && !zero; ++s) {
            if (coeff[s][tuple[s]].is_zero()) zero = true;
            else prod = prod * coeff[s][tuple[s]];
        }
        if (!zero) {
            ModElem v = g.value_at(tuple);
            if (!v.is_zero()) {
                for (const auto& [from, to] : rename) v = v.substitute(from, to);
                for (const auto& [from, to] : fill) v = v.substitute(from, to);
                out += prod * v;
            }
        }
        int p = n - 1;
        while (p >= 0 && tuple[p] == ralg - 1) tuple[p--] = 0;
        if (p < 0) break;
        ++tuple[p];
    }
    return out;
}

ActionTable induce_right_action(const ActionTable& left) {
    if (left.side != Side::Left) throw engine_error("induce_right_action: left action required");
    return left_to_right(left);
}

Cochain apply_delta(const Cochain& g, DeltaFormula f) {
    const int n = g.degree;
    if (n > config().max_delta_input_degree)
        throw engine_error("apply_delta: cochain degree exceeds the configured maximum");
    const ActionTable* ract = nullptr;
    ActionTable induced = g.left;   // placeholder
    if (f == DeltaFormula::Leibniz) {
        if (g.right) {
            ract = &*g.right;
        } else {
            induced = induce_right_action(g.left);
            ract = &induced;
        }
    }

    Cochain out = Cochain::zero(n + 1, g.algebra, g.left);
    out.right = g.right;
    const int ralg = g.algebra.module->rank();
    auto gen = [&](int i) { return ModElem::generator(g.algebra.module, i); };

    std::vector<Poly> nat(n + 1);           // natural indices L1..Ln
    for (int i = 0; i < n; ++i) nat[i] = lam(i + 1);
    Poly total;
    for (int i = 0; i < n; ++i) total += nat[i];
    Poly implicit = -Poly::partial() - total;   // lambda_{n+1}
    nat[n] = implicit;

    for (const auto& tuple : all_tuples(ralg, n + 1)) {
        ModElem acc(g.left.module);

        // Action terms.
        const int top = f == DeltaFormula::Lie ? n + 1 : n;
        for (int i = 1; i <= top; ++i) {
            std::vector<ModElem> args;
            std::vector<Poly> slots;
            for (int s = 1; s <= n + 1; ++s)
                if (s != i) args.push_back(gen(tuple[s - 1]));
            if (i <= n) {
                for (int s = 1; s <= n; ++s)
                    if (s != i) slots.push_back(nat[s - 1]);
            } else {
                for (int s = 1; s <= n - 1; ++s) slots.push_back(nat[s - 1]);
            }
            ModElem val = cochain_eval(g, args, slots);
            ModElem term(g.left.module);
            if (i <= n) {
                term = eval_action_left(g.left, gen(tuple[i - 1]), Var::lambda(i), val);
            } else {
                term = eval_action_left_at(g.left, gen(tuple[i - 1]), implicit, val);
            }
            if (i % 2 == 0) acc -= term;
            else acc += term;
        }

        if (f == DeltaFormula::Leibniz) {
            // (-1)^{n+1} gamma(x_1..x_n) <|_{L1+..+Ln} x_{n+1}
            std::vector<ModElem> args;
            std::vector<Poly> slots;
            for (int s = 1; s <= n; ++s) args.push_back(gen(tuple[s - 1]));
            for (int s = 1; s <= n - 1; ++s) slots.push_back(nat[s - 1]);
            ModElem val = cochain_eval(g, args, slots);
            ModElem term = eval_action_right_at(*ract, val, total, gen(tuple[n]));
            if ((n + 1) % 2 == 0) acc += term;
            else acc -= term;
        }

        // Pair terms.
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n + 1; ++j) {
                ModElem br = eval_bracket(g.algebra, gen(tuple[i - 1]), Var::lambda(i),
                                          gen(tuple[j - 1]));
                std::vector<ModElem> args;
                std::vector<Poly> index_list;
                int sign;
                if (f == DeltaFormula::Lie) {
                    // gamma_{li+lj, ...}([x_i x_j], rest), sign (-1)^{i+j}
                    args.push_back(br);
                    for (int s = 1; s <= n + 1; ++s)
                        if (s != i && s != j) args.push_back(gen(tuple[s - 1]));
                    index_list.push_back(nat[i - 1] + nat[j - 1]);
                    for (int s = 1; s <= n; ++s)
                        if (s != i && s != j) index_list.push_back(nat[s - 1]);
                    sign = (i + j) % 2 == 0 ? 1 : -1;
                } else {
                    // gamma(..., [x_i x_j] in place of x_j, ...), sign (-1)^i
                    for (int s = 1; s <= n + 1; ++s) {
                        if (s == i) continue;
                        args.push_back(s == j ? br : gen(tuple[s - 1]));
                    }
                    for (int s = 1; s <= n; ++s) {
                        if (s == i) continue;
                        index_list.push_back(s == j ? nat[i - 1] + nat[j - 1] : nat[s - 1]);
                    }
                    sign = i % 2 == 0 ? 1 : -1;
                }
                // The last argument's index is always implicit.
                std::vector<Poly> slots(index_list.begin(),
                                        index_list.begin() + std::max(0, n - 1));
                ModElem term = cochain_eval(g, args, slots);
                if (sign > 0) acc += term;
                else acc -= term;
            }

        if (!acc.is_zero()) out.values[tuple] = acc;
    }
    return out;
}

Report check_delta_squared(const Cochain& g, DeltaFormula f) {
    Report rep;
    rep.object = g.name;
    Cochain d1 = apply_delta(g, f);
    Cochain d2 = apply_delta(d1, f);
    bool pass = true;
    std::string witness;
    for (const auto& [tuple, v] : d2.values)
        if (!v.is_zero()) {
            pass = false;
            witness = witness_str(g.algebra.module, tuple, v);
            break;
        }
    rep.add(std::string("delta-squared-") + (f == DeltaFormula::Lie ? "lie" : "leibniz"), pass,
            witness);
    return rep;
}

Report is_cocycle(const Cochain& g, DeltaFormula f) {
    Report rep;
    rep.object = g.name;
    Cochain d1 = apply_delta(g, f);
    bool pass = true;
    std::string witness;
    for (const auto& [tuple, v] : d1.values)
        if (!v.is_zero()) {
            pass = false;
            witness = witness_str(g.algebra.module, tuple, v);
            break;
        }
    rep.add("cocycle", pass, witness);
    return rep;
}

} // namespace conformal
