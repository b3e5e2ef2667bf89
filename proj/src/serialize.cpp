#include "tamedeg/serialize.hpp"

#include <stdexcept>

#include "tamedeg/text.hpp"

namespace tamedeg {

namespace {

const Json& field(const Json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key)) throw std::invalid_argument(std::string("missing field '") + key + "'");
    return j.at(key);
}

std::uint64_t natural(const Json& j, const char* key)
{
    const Json& v = field(j, key);
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0))
        throw std::invalid_argument(std::string("field '") + key + "' must be a natural number");
    return v.get<std::uint64_t>();
}

Rational rational_from(const Json& v)
{
    if (v.is_string()) return parse_rational(v.get<std::string>());
    if (v.is_number_integer()) return Rational(v.get<long>());
    throw std::invalid_argument("coefficient must be a \"p/q\" string");
}

Inequality::Rel rel_from(const std::string& s)
{
    using R = Inequality::Rel;
    for (R r : {R::Less, R::LessEq, R::Greater, R::GreaterEq, R::NotEqual})
        if (to_string(r) == s) return r;
    throw std::invalid_argument("unknown relation '" + s + "'");
}

Inequality inequality_from(const Json& j)
{
    Inequality q{field(j, "label").get<std::string>(), field(j, "lhs").get<std::int64_t>(),
                 rel_from(field(j, "rel").get<std::string>()), field(j, "rhs").get<std::int64_t>()};
    return q;
}

Json to_json(const CoordinateObstruction& c)
{
    Json chain = Json::array();
    for (const auto& q : c.chain) chain.push_back(to_json(q));
    return Json{{"coordinate", c.coordinate}, {"chain", chain}, {"symmetric_to_previous", c.symmetric_to_previous}};
}

CoordinateObstruction obstruction_from(const Json& j)
{
    CoordinateObstruction c;
    c.coordinate = field(j, "coordinate").get<std::string>();
    for (const auto& q : field(j, "chain")) c.chain.push_back(inequality_from(q));
    c.symmetric_to_previous = field(j, "symmetric_to_previous").get<bool>();
    return c;
}

FilterReport filter_from(const Json& j)
{
    FilterReport r;
    r.p1 = natural(j, "p1");
    r.p2 = natural(j, "p2");
    r.d3 = natural(j, "d3");
    r.applicable = field(j, "applicable").get<bool>();
    r.parity_allows = field(j, "parity_allows").get<bool>();
    if (!field(j, "half").is_null()) r.half = natural(j, "half");
    r.type_i_ii_possible = field(j, "type_i_ii_possible").get<bool>();
    r.type_iii_iv_possible = field(j, "type_iii_iv_possible").get<bool>();
    r.excluded = field(j, "excluded").get<bool>();
    r.reason = field(j, "reason").get<std::string>();
    return r;
}

Json degree_to_json(const Degree& d)
{
    return d.is_finite() ? Json(d.value()) : Json("-inf");
}

}  // namespace

Json to_json(const Polynomial& f)
{
    Json terms = Json::array();
    for (const auto& [m, c] : f.terms()) {
        Json e = Json::array();
        for (auto x : m.exponents()) e.push_back(x);
        terms.push_back(Json{{"c", rational_to_string(c)}, {"e", e}});
    }
    return Json{{"nvars", f.nvars()}, {"terms", terms}};
}

Polynomial polynomial_from_json(const Json& j)
{
    const auto nvars = natural(j, "nvars");
    Polynomial f(nvars);
    for (const auto& t : field(j, "terms")) {
        const auto& e = field(t, "e");
        if (!e.is_array() || e.size() != nvars) throw std::invalid_argument("exponent vector has wrong length");
        std::vector<std::uint32_t> exps;
        for (const auto& x : e) exps.push_back(x.get<std::uint32_t>());
        const Rational c = rational_from(field(t, "c"));
        if (c == 0) throw std::invalid_argument("zero coefficient stored in polynomial");
        f.add_term(Monomial(std::move(exps)), c);
    }
    return f;
}

Json to_json(const PolyMap& f)
{
    Json coords = Json::array();
    for (const auto& c : f.coords()) coords.push_back(to_json(c));
    return Json{{"n", f.n()}, {"coords", coords}};
}

PolyMap polymap_from_json(const Json& j)
{
    const auto n = natural(j, "n");
    std::vector<Polynomial> coords;
    for (const auto& c : field(j, "coords")) coords.push_back(polynomial_from_json(c));
    if (coords.size() != n) throw std::invalid_argument("map has wrong number of coordinates");
    return PolyMap(std::move(coords));
}

Json to_json(const TameWord& w)
{
    Json factors = Json::array();
    for (const auto& f : w.factors()) {
        if (const auto* e = std::get_if<ElementaryFactor>(&f)) {
            factors.push_back(Json{{"type", "elementary"}, {"index", e->index() + 1}, {"addend", to_json(e->addend())}});
            continue;
        }
        const auto& lin = std::get<LinearFactor>(f);
        Json matrix = Json::array();
        for (const auto& row : lin.matrix()) {
            Json r = Json::array();
            for (const auto& q : row) r.push_back(rational_to_string(q));
            matrix.push_back(r);
        }
        Json shift = Json::array();
        for (const auto& q : lin.shift()) shift.push_back(rational_to_string(q));
        factors.push_back(Json{{"type", "linear"}, {"matrix", matrix}, {"shift", shift}});
    }
    return Json{{"n", w.n()}, {"factors", factors}};
}

TameWord tameword_from_json(const Json& j)
{
    const auto n = natural(j, "n");
    TameWord w(n);
    for (const auto& f : field(j, "factors")) {
        const auto type = field(f, "type").get<std::string>();
        if (type == "elementary") {
            const auto index = natural(f, "index");
            if (index == 0) throw std::invalid_argument("elementary factor index is one-based");
            w.append(ElementaryFactor(index - 1, polynomial_from_json(field(f, "addend"))));
        } else if (type == "linear") {
            RationalMatrix m;
            for (const auto& row : field(f, "matrix")) {
                std::vector<Rational> r;
                for (const auto& q : row) r.push_back(rational_from(q));
                m.push_back(std::move(r));
            }
            std::vector<Rational> shift;
            for (const auto& q : field(f, "shift")) shift.push_back(rational_from(q));
            w.append(LinearFactor(std::move(m), std::move(shift)));
        } else {
            throw std::invalid_argument("unknown factor type '" + type + "'");
        }
    }
    return w;
}

PolyMap map_from_json(const Json& j)
{
    if (j.is_object() && j.contains("factors")) return expand(tameword_from_json(j));
    return polymap_from_json(j);
}

Json to_json(const Inequality& q)
{
    return Json{{"label", q.label}, {"lhs", q.lhs}, {"rel", to_string(q.rel)}, {"rhs", q.rhs}, {"holds", q.holds()}};
}

Json to_json(const FilterReport& r)
{
    return Json{{"p1", r.p1},
                {"p2", r.p2},
                {"d3", r.d3},
                {"applicable", r.applicable},
                {"parity_allows", r.parity_allows},
                {"half", r.half ? Json(*r.half) : Json(nullptr)},
                {"type_i_ii_possible", r.type_i_ii_possible},
                {"type_iii_iv_possible", r.type_iii_iv_possible},
                {"excluded", r.excluded},
                {"reason", r.reason}};
}

Json to_json(const NonMemberTrace& t)
{
    Json residues = Json::array();
    for (const auto& r : t.residues) residues.push_back(Json{{"r", r.r}, {"reachable", r.reachable}});
    return Json{{"p1", t.p1},
                {"p2", t.p2},
                {"d3", t.d3},
                {"sylvester_bound", t.sylvester_bound},
                {"sylvester", to_json(t.sylvester)},
                {"types_I_IV", to_json(t.types_filter)},
                {"residues", residues},
                {"elementary", Json::array({to_json(t.third), to_json(t.second), to_json(t.first)})},
                {"valid", t.valid()}};
}

NonMemberTrace trace_from_json(const Json& j)
{
    NonMemberTrace t{};
    t.p1 = natural(j, "p1");
    t.p2 = natural(j, "p2");
    t.d3 = natural(j, "d3");
    t.sylvester_bound = natural(j, "sylvester_bound");
    t.sylvester = inequality_from(field(j, "sylvester"));
    t.types_filter = filter_from(field(j, "types_I_IV"));
    for (const auto& r : field(j, "residues")) t.residues.push_back({natural(r, "r"), field(r, "reachable").get<bool>()});
    const auto& el = field(j, "elementary");
    if (!el.is_array() || el.size() != 3) throw std::invalid_argument("trace needs three coordinate records");
    t.third = obstruction_from(el[0]);
    t.second = obstruction_from(el[1]);
    t.first = obstruction_from(el[2]);
    return t;
}

Json to_json(const Verdict& v)
{
    Json j{{"verdict", verdict_name(v)}};
    if (const auto* m = std::get_if<Member>(&v)) {
        j["representation"] = m->representation.coefficients;
        j["index"] = m->index + 1;
        j["witness"] = to_json(m->witness);
    } else if (const auto* nm = std::get_if<NonMember>(&v)) {
        j["trace"] = to_json(nm->trace);
    } else if (const auto* k = std::get_if<KnownNonMember>(&v)) {
        j["citation"] = k->citation;
    } else {
        j["reason"] = std::get<OutOfScope>(v).reason;
    }
    return j;
}

Verdict verdict_from_json(const Json& j)
{
    const auto kind = field(j, "verdict").get<std::string>();
    if (kind == "member") {
        const auto index = natural(j, "index");
        if (index == 0) throw std::invalid_argument("verdict index is one-based");
        return Member{Representation{field(j, "representation").get<std::vector<std::uint64_t>>()}, index - 1,
                      tameword_from_json(field(j, "witness"))};
    }
    if (kind == "nonmember") return NonMember{trace_from_json(field(j, "trace"))};
    if (kind == "known_nonmember") return KnownNonMember{field(j, "citation").get<std::string>()};
    if (kind == "out_of_scope") return OutOfScope{field(j, "reason").get<std::string>()};
    throw std::invalid_argument("unknown verdict '" + kind + "'");
}

Json to_json(const ReductionWitness& w)
{
    return Json{{"target", w.target + 1}, {"g", to_json(w.g)}, {"new_degree", degree_to_json(w.new_degree)}, {"budget", w.budget}};
}

ReductionWitness reduction_from_json(const Json& j)
{
    ReductionWitness w;
    const auto target = natural(j, "target");
    if (target == 0) throw std::invalid_argument("reduction target is one-based");
    w.target = target - 1;
    w.g = polynomial_from_json(field(j, "g"));
    const auto& nd = field(j, "new_degree");
    if (nd.is_string()) {
        if (nd.get<std::string>() != "-inf") throw std::invalid_argument("new_degree must be a natural or \"-inf\"");
        w.new_degree = Degree::minus_infinity();
    } else {
        w.new_degree = natural(j, "new_degree");
    }
    w.budget = natural(j, "budget");
    return w;
}

Json to_json(const VerificationReport& r)
{
    return Json{{"pass", r.passed()},
                {"mdeg", r.multidegree.degrees},
                {"right_inverse", r.right_inverse},
                {"left_inverse", r.left_inverse},
                {"jacobian_det", to_string(r.jacobian)},
                {"jacobian_nonzero_constant", r.jacobian_nonzero_constant},
                {"map", to_json(r.map)}};
}

}  // namespace tamedeg
