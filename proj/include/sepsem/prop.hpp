#pragma once

#include <memory>
#include <optional>
#include <set>
#include <string>

namespace sepsem {

/// Immutable proposition tree over an atom type: Top, an atom, separating
/// conjunction, and the pointwise connectives. Atoms expose a `var` field.
template <typename A>
class Prop {
public:
    enum class Kind { top, atom, star, conj, disj };

    static Prop top() { return Prop(std::make_shared<Node>(Node{Kind::top, {}, {}, {}})); }
    static Prop atom(A a) {
        return Prop(std::make_shared<Node>(Node{Kind::atom, std::move(a), {}, {}}));
    }
    static Prop star(Prop l, Prop r) { return mk(Kind::star, std::move(l), std::move(r)); }
    static Prop conj(Prop l, Prop r) { return mk(Kind::conj, std::move(l), std::move(r)); }
    static Prop disj(Prop l, Prop r) { return mk(Kind::disj, std::move(l), std::move(r)); }

    Kind kind() const { return node_->kind; }
    const A& get_atom() const { return *node_->atom; }
    Prop lhs() const { return Prop(node_->lhs); }
    Prop rhs() const { return Prop(node_->rhs); }

    /// Stable identity of the shared node, usable as a memo key.
    const void* id() const { return node_.get(); }

    std::set<std::string> free_vars() const {
        std::set<std::string> out;
        collect_vars(out);
        return out;
    }

    bool contains_star() const {
        switch (kind()) {
        case Kind::top:
        case Kind::atom: return false;
        case Kind::star: return true;
        default: return lhs().contains_star() || rhs().contains_star();
        }
    }

    bool operator==(const Prop& other) const {
        if (node_ == other.node_)
            return true;
        if (kind() != other.kind())
            return false;
        switch (kind()) {
        case Kind::top: return true;
        case Kind::atom: return get_atom() == other.get_atom();
        default: return lhs() == other.lhs() && rhs() == other.rhs();
        }
    }

private:
    struct Node {
        Kind kind;
        std::optional<A> atom;
        std::shared_ptr<const Node> lhs, rhs;
    };

    explicit Prop(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

    static Prop mk(Kind k, Prop l, Prop r) {
        return Prop(std::make_shared<Node>(Node{k, {}, std::move(l.node_), std::move(r.node_)}));
    }

    void collect_vars(std::set<std::string>& out) const {
        switch (kind()) {
        case Kind::top: return;
        case Kind::atom: out.insert(node_->atom->var); return;
        default:
            lhs().collect_vars(out);
            rhs().collect_vars(out);
        }
    }

    std::shared_ptr<const Node> node_;
};

} // namespace sepsem
