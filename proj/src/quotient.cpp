#include "reslat/quotient.hpp"

#include <string>

namespace reslat {

namespace {

bool congruent(const ResiduatedLattice& L, const Filter& f, Element x, Element y) {
    return f.contains(L.tensor(L.residuum(x, y), L.residuum(y, x)));
}

std::string class_name(const ResiduatedLattice& L, const Subset& cls) {
    std::string s = "{";
    bool first = true;
    for (Element x : cls.members()) {
        if (!first) s += ",";
        s += L.name(x);
        first = false;
    }
    return s + "}";
}

}  // namespace

QuotientAlgebra quotient(const ResiduatedLattice& L, const Filter& f) {
    const int n = L.size();
    std::vector<Subset> classes;
    std::vector<int> class_of(n, -1);
    std::vector<Element> reps;

    // Scanning elements in index order makes class order = least-member order.
    for (Element x = 0; x < n; ++x) {
        for (std::size_t c = 0; c < reps.size(); ++c)
            if (congruent(L, f, reps[c], x)) {
                class_of[x] = static_cast<int>(c);
                classes[c].set(x);
                break;
            }
        if (class_of[x] < 0) {
            class_of[x] = static_cast<int>(reps.size());
            reps.push_back(x);
            classes.push_back(Subset::single(n, x));
        }
    }

    // The relation must be an equivalence and the partition must match it.
    for (Element x = 0; x < n; ++x)
        for (Element y = 0; y < n; ++y)
            if (congruent(L, f, x, y) != (class_of[x] == class_of[y]))
                throw InternalError("congruence: relation disagrees with its partition at (" +
                                    L.name(x) + "," + L.name(y) + ")");

    const int k = static_cast<int>(classes.size());
    RawTables t;
    t.names.reserve(k);
    for (const Subset& cls : classes) t.names.push_back(class_name(L, cls));
    t.meet = OpTable(k);
    t.join = OpTable(k);
    t.tensor = OpTable(k);
    t.residuum = OpTable(k);

    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            t.meet.at(i, j) = class_of[L.meet(reps[i], reps[j])];
            t.join.at(i, j) = class_of[L.join(reps[i], reps[j])];
            t.tensor.at(i, j) = class_of[L.tensor(reps[i], reps[j])];
            t.residuum->at(i, j) = class_of[L.residuum(reps[i], reps[j])];
        }

    // Representative independence: any member pair must land in the same class.
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            for (Element x : classes[i].members())
                for (Element y : classes[j].members()) {
                    bool ok = class_of[L.meet(x, y)] == t.meet(i, j) &&
                              class_of[L.join(x, y)] == t.join(i, j) &&
                              class_of[L.tensor(x, y)] == t.tensor(i, j) &&
                              class_of[L.residuum(x, y)] == (*t.residuum)(i, j);
                    if (!ok)
                        throw InternalError("congruence: operations not well defined at (" +
                                            L.name(x) + "," + L.name(y) + ")");
                }

    QuotientAlgebra q;
    q.base = L;
    q.filter = f;
    q.classes = std::move(classes);
    q.class_of = std::move(class_of);
    try {
        q.algebra = ResiduatedLattice::from_tables(std::move(t), /*allow_trivial=*/true);
    } catch (const ValidationFailed& e) {
        throw InternalError("quotient algebra violates the axioms: " +
                            std::string(e.what()));
    }

    if (q.classes[q.class_of[L.top()]] != f.elements)
        throw InternalError("congruence: class of 1 differs from the filter");
    return q;
}

}  // namespace reslat
