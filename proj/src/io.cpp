#include "reslat/io.hpp"

#include <fstream>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

namespace reslat {

namespace {

using ordered_json = nlohmann::ordered_json;

OpTable parse_table(const ordered_json& doc, const char* key,
                    const std::unordered_map<std::string, Element>& by_name, int n) {
    if (!doc.contains(key))
        throw MalformedTables(std::string("missing field '") + key + "'");
    const ordered_json& rows = doc[key];
    if (!rows.is_array() || static_cast<int>(rows.size()) != n)
        throw MalformedTables(std::string("field '") + key + "' is not an array of " +
                              std::to_string(n) + " rows");
    OpTable t(n);
    for (int x = 0; x < n; ++x) {
        const ordered_json& row = rows[x];
        if (!row.is_array() || static_cast<int>(row.size()) != n)
            throw MalformedTables(std::string("row ") + std::to_string(x) + " of '" + key +
                                  "' is not an array of " + std::to_string(n) + " entries");
        for (int y = 0; y < n; ++y) {
            const ordered_json& cell = row[y];
            Element v = -1;
            if (cell.is_number_integer()) {
                v = cell.get<Element>();
            } else if (cell.is_string()) {
                auto it = by_name.find(cell.get<std::string>());
                if (it == by_name.end())
                    throw MalformedTables("unknown element '" + cell.get<std::string>() +
                                          "' in '" + key + "'");
                v = it->second;
            } else {
                throw MalformedTables(std::string("entry in '") + key +
                                      "' is neither a name nor an index");
            }
            if (v < 0 || v >= n)
                throw MalformedTables(std::string("entry out of range in '") + key + "'");
            t.at(x, y) = v;
        }
    }
    return t;
}

ordered_json table_to_json(const ResiduatedLattice& L, const OpTable& t) {
    ordered_json rows = ordered_json::array();
    for (int x = 0; x < L.size(); ++x) {
        ordered_json row = ordered_json::array();
        for (int y = 0; y < L.size(); ++y) row.push_back(L.name(t(x, y)));
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

RawTables parse_lattice(const std::string& text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw MalformedTables(std::string("invalid lattice document: ") + e.what());
    }
    if (!doc.is_object()) throw MalformedTables("lattice document is not an object");
    if (!doc.contains("elements") || !doc["elements"].is_array())
        throw MalformedTables("missing 'elements' list");

    RawTables t;
    std::unordered_map<std::string, Element> by_name;
    for (const ordered_json& e : doc["elements"]) {
        if (!e.is_string()) throw MalformedTables("element names must be strings");
        std::string name = e.get<std::string>();
        if (!by_name.emplace(name, static_cast<Element>(t.names.size())).second)
            throw MalformedTables("duplicate element name '" + name + "'");
        t.names.push_back(std::move(name));
    }
    const int n = t.size();
    if (n == 0) throw MalformedTables("empty carrier");

    t.meet = parse_table(doc, "meet", by_name, n);
    t.join = parse_table(doc, "join", by_name, n);
    t.tensor = parse_table(doc, "tensor", by_name, n);
    if (doc.contains("residuum")) t.residuum = parse_table(doc, "residuum", by_name, n);
    return t;
}

ResiduatedLattice load_lattice(const std::string& text) {
    return ResiduatedLattice::from_tables(parse_lattice(text));
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw MalformedTables("cannot read file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

ResiduatedLattice load_lattice_file(const std::string& path) {
    return load_lattice(read_file(path));
}

std::string serialize_lattice(const ResiduatedLattice& L) {
    ordered_json doc;
    doc["elements"] = L.names();
    doc["meet"] = table_to_json(L, L.meet_table());
    doc["join"] = table_to_json(L, L.join_table());
    doc["tensor"] = table_to_json(L, L.tensor_table());
    doc["residuum"] = table_to_json(L, L.residuum_table());
    return doc.dump(2) + "\n";
}

std::string serialize_quotient(const QuotientAlgebra& q) {
    return serialize_lattice(q.algebra);
}

}  // namespace reslat
