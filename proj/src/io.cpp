#include "brann/io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include "brann/error.hpp"

namespace brann {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& field, const std::string& what) {
    throw ParseError(where + ": field '" + field + "': " + what);
}

const json& member(const json& j, const std::string& where, const std::string& field) {
    if (!j.is_object()) fail(where, field, "enclosing value is not an object");
    auto it = j.find(field);
    if (it == j.end()) fail(where, field, "missing");
    return *it;
}

int as_int(const json& j, const std::string& where, const std::string& field) {
    if (!j.is_number_integer()) fail(where, field, "expected an integer");
    auto v = j.get<std::int64_t>();
    if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max())
        fail(where, field, "integer out of range");
    return static_cast<int>(v);
}

std::vector<int> int_list(const json& j, const std::string& where, const std::string& field) {
    if (!j.is_array()) fail(where, field, "expected an array of integers");
    std::vector<int> out;
    for (std::size_t i = 0; i < j.size(); ++i)
        out.push_back(as_int(j[i], where, field + "[" + std::to_string(i) + "]"));
    return out;
}

Matrix2D int_matrix(const json& j, const std::string& where, const std::string& field) {
    if (!j.is_array()) fail(where, field, "expected an array of arrays of integers");
    Matrix2D out;
    for (std::size_t i = 0; i < j.size(); ++i)
        out.push_back(int_list(j[i], where, field + "[" + std::to_string(i) + "]"));
    return out;
}

// Fills `t` from nested arrays of depth t.arity().
void fill_table(const json& j, Table& t, int values, const std::string& where,
                const std::string& field) {
    const int n = t.ring_size();
    std::vector<int> args(t.arity(), 0);
    auto rec = [&](auto&& self, const json& node, int depth, const std::string& path) -> void {
        if (depth == t.arity()) {
            int v = as_int(node, where, path);
            if (v < 0 || v >= values)
                fail(where, path, "value " + std::to_string(v) + " is not an element index below " +
                                      std::to_string(values));
            t.at(args) = v;
            return;
        }
        if (!node.is_array() || static_cast<int>(node.size()) != n)
            fail(where, path, "expected an array of length " + std::to_string(n));
        for (int i = 0; i < n; ++i) {
            args[depth] = i;
            self(self, node[i], depth + 1, path + "[" + std::to_string(i) + "]");
        }
    };
    rec(rec, j, 0, field);
}

json table_json(const Table& t) {
    const int n = t.ring_size();
    auto rec = [&](auto&& self, std::size_t offset, int depth) -> json {
        if (depth == t.arity()) return t.data()[offset];
        json arr = json::array();
        std::size_t stride = 1;
        for (int d = depth + 1; d < t.arity(); ++d) stride *= static_cast<std::size_t>(n);
        for (int i = 0; i < n; ++i) arr.push_back(self(self, offset + i * stride, depth + 1));
        return arr;
    };
    return rec(rec, 0, 0);
}

const json& resolve(const json& j, const std::filesystem::path& base, const std::string& where,
                    const std::string& field, json& storage, std::string& source) {
    const json& v = member(j, where, field);
    source = where;
    if (!v.is_string()) return v;
    std::filesystem::path p = v.get<std::string>();
    if (p.is_relative()) p = base / p;
    storage = read_json(p);
    source = p.string();
    return storage;
}

} // namespace

json read_json(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path.string() + ": cannot open file");
    std::stringstream ss;
    ss << in.rdbuf();
    try {
        return json::parse(ss.str());
    } catch (const json::parse_error& e) {
        throw ParseError(path.string() + ": malformed JSON: " + e.what());
    }
}

FiniteCommutativeRing ring_from_json(const json& j, const std::string& where) {
    const json& kind = member(j, where, "kind");
    if (!kind.is_string()) fail(where, "kind", "expected a string");
    const std::string k = kind.get<std::string>();
    if (k == "cyclic") {
        int n = as_int(member(j, where, "n"), where, "n");
        if (n < 1) fail(where, "n", "ring order must be positive");
        return make_cyclic_ring(n);
    }
    if (k == "table") {
        Matrix2D add = int_matrix(member(j, where, "add"), where, "add");
        Matrix2D mul = int_matrix(member(j, where, "mul"), where, "mul");
        int zero = as_int(member(j, where, "zero"), where, "zero");
        int one = as_int(member(j, where, "one"), where, "one");
        return FiniteCommutativeRing::from_tables(add, mul, zero, one);
    }
    fail(where, "kind", "unknown ring kind '" + k + "' (expected cyclic or table)");
}

FiniteModule module_from_json(const json& j, const FiniteCommutativeRing& ring,
                              const std::string& where) {
    std::vector<int> factors = int_list(member(j, where, "factors"), where, "factors");
    Matrix2D action = int_matrix(member(j, where, "action"), where, "action");
    return FiniteModule::make(ring, std::move(factors), action);
}

HomPair hom_from_json(const json& j, const FiniteModule& source, const FiniteModule& target,
                      const std::string& where) {
    std::vector<int> p = int_list(member(j, where, "p"), where, "p");
    std::vector<int> q = int_list(member(j, where, "q"), where, "q");
    if (static_cast<int>(p.size()) != source.ring().size())
        fail(where, "p", "expected " + std::to_string(source.ring().size()) + " entries");
    for (int v : p)
        if (v < 0 || v >= target.ring().size()) fail(where, "p", "entry outside the target ring");
    if (static_cast<int>(q.size()) != source.size())
        fail(where, "q", "expected " + std::to_string(source.size()) + " entries");
    for (int v : q)
        if (v < 0 || v >= target.size()) fail(where, "q", "entry outside the target module");
    return HomPair{RingHom{source.ring(), target.ring(), std::move(p)}, source, target, std::move(q)};
}

Cochain cochain_from_json(const json& j, const ModulePtr& module, const std::string& where) {
    if (!j.is_object()) fail(where, "cochain", "expected an object");
    int degree = 0;
    if (j.contains("degree")) {
        degree = as_int(j["degree"], where, "degree");
        if (degree < 1 || degree > 3) fail(where, "degree", "must be 1, 2 or 3");
    } else {
        degree = j.contains("t") ? 1 : j.contains("mu") ? 2 : 3;
    }
    Variant variant = Variant::ab;
    if (j.contains("variant")) {
        if (!j["variant"].is_string()) fail(where, "variant", "expected a string");
        try {
            variant = parse_variant(j["variant"].get<std::string>());
        } catch (const Error&) {
            fail(where, "variant", "expected macl, ab or sym");
        }
    } else if (degree == 3 && !j.contains("beta")) {
        variant = Variant::macl;
    }
    Cochain c = Cochain::zero(module, degree, variant);
    for (Component comp : c.components()) {
        const std::string name(component_name(comp));
        fill_table(member(j, where, name), c[comp], module->size(), where, name);
    }
    return c;
}

Table alpha_from_json(const json& j, const FiniteCommutativeRing& ring, int module_size,
                      const std::string& where) {
    Table t(ring.size(), 3);
    fill_table(member(j, where, "alpha"), t, module_size, where, "alpha");
    return t;
}

CategoryFile category_from_json(const json& j, const std::filesystem::path& base,
                                const std::string& where) {
    json storage;
    std::string src;
    FiniteCommutativeRing ring = ring_from_json(resolve(j, base, where, "ring", storage, src), src);
    auto module = std::make_shared<const FiniteModule>(
        module_from_json(resolve(j, base, where, "module", storage, src), ring, src));
    Cochain s = cochain_from_json(resolve(j, base, where, "structure", storage, src), module, src);
    if (s.degree() != 3) fail(src, "structure", "expected a degree-3 cochain");
    if (!s.has(Component::beta)) fail(src, "beta", "missing");
    return {std::move(module), std::move(s)};
}

CategoryFile load_category(const std::filesystem::path& path) {
    return category_from_json(read_json(path), path.parent_path(), path.string());
}

BrAnnFunctorData functor_from_json(const json& j, const FiniteModule& source,
                                   const FiniteModule& target, const std::string& where) {
    HomPair pair = hom_from_json(j, source, target, where);
    ModulePtr mp = functor_module(pair);
    const json& g = member(j, where, "g");
    json gj = g;
    gj["degree"] = 2;
    return {std::move(pair), cochain_from_json(gj, mp, where)};
}

json to_json(const Table& t) { return table_json(t); }

json to_json(const FiniteCommutativeRing& ring) {
    if (ring == make_cyclic_ring(ring.size())) return {{"kind", "cyclic"}, {"n", ring.size()}};
    Matrix2D add(ring.size(), std::vector<int>(ring.size()));
    Matrix2D mul = add;
    for (int x = 0; x < ring.size(); ++x)
        for (int y = 0; y < ring.size(); ++y) {
            add[x][y] = ring.add(x, y);
            mul[x][y] = ring.mul(x, y);
        }
    return {{"kind", "table"}, {"add", add}, {"mul", mul}, {"zero", ring.zero()}, {"one", ring.one()}};
}

json to_json(const FiniteModule& module) {
    return {{"factors", module.factors()}, {"action", module.action_rows()}};
}

json to_json(const Cochain& c) {
    json j = json::object();
    j["degree"] = c.degree();
    j["variant"] = std::string(variant_name(c.variant()));
    for (Component comp : c.components()) j[std::string(component_name(comp))] = table_json(c[comp]);
    return j;
}

json to_json(const CohomologyGroup& group) {
    json reps = json::array();
    for (const Cochain& c : group.representatives()) reps.push_back(to_json(c));
    return {{"invariant_factors", group.invariant_factors()}, {"representatives", reps}};
}

json to_json(const BrAnnFunctorData& f) {
    return {{"p", f.pair.p.map},
            {"q", f.pair.q},
            {"g", {{"mu", table_json(f.g[Component::mu])}, {"nu", table_json(f.g[Component::nu])}}}};
}

} // namespace brann
