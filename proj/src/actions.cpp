// ActionSpec parsing, the build dispatcher, orbit machinery, orbit
// restriction and the diagonal power action.
#include "gac/actions.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace gac {

// defined in the per-family translation units
ActionDescriptor build_mod_add(uint64_t n);
ActionDescriptor build_discrete_log(uint64_t p, uint64_t gen);
ActionDescriptor build_graph_iso(uint64_t vertices);
ActionDescriptor build_deck(uint64_t vertices);
ActionDescriptor build_code_perm(uint64_t n, uint64_t k);

ActionSpec ActionSpec::mod_add(uint64_t n) {
    ActionSpec s;
    s.kind = ActionKind::mod_add;
    s.n = n;
    return s;
}

ActionSpec ActionSpec::discrete_log(uint64_t p, uint64_t generator) {
    ActionSpec s;
    s.kind = ActionKind::discrete_log;
    s.p = p;
    s.generator = generator;
    return s;
}

ActionSpec ActionSpec::graph_iso(uint64_t vertices) {
    ActionSpec s;
    s.kind = ActionKind::graph_iso;
    s.n = vertices;
    return s;
}

ActionSpec ActionSpec::code_perm(uint64_t n, uint64_t k) {
    ActionSpec s;
    s.kind = ActionKind::code_perm;
    s.n = n;
    s.k = k;
    return s;
}

ActionSpec ActionSpec::deck(uint64_t vertices) {
    ActionSpec s;
    s.kind = ActionKind::deck;
    s.n = vertices;
    return s;
}

std::string ActionSpec::id() const {
    switch (kind) {
        case ActionKind::mod_add:
            return "modadd-" + std::to_string(n);
        case ActionKind::discrete_log:
            return "dlog-" + std::to_string(p) + "-" + std::to_string(generator);
        case ActionKind::graph_iso:
            return "graphiso-" + std::to_string(n);
        case ActionKind::code_perm:
            return "codeperm-" + std::to_string(n) + "-" + std::to_string(k);
        case ActionKind::deck:
            return "deck-" + std::to_string(n);
    }
    throw InvalidParameterError("unknown action kind");
}

namespace {

std::vector<uint64_t> parse_dashed_numbers(const std::string& text) {
    std::vector<uint64_t> out;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, '-')) {
        if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos) {
            throw InvalidParameterError("malformed action id component: '" + token + "'");
        }
        out.push_back(std::stoull(token));
    }
    return out;
}

}  // namespace

ActionSpec ActionSpec::from_id(const std::string& id) {
    const size_t dash = id.find('-');
    if (dash == std::string::npos) {
        throw InvalidParameterError("malformed action id: '" + id + "'");
    }
    const std::string family = id.substr(0, dash);
    const std::vector<uint64_t> args = parse_dashed_numbers(id.substr(dash + 1));
    if (family == "modadd" && args.size() == 1) {
        return mod_add(args[0]);
    }
    if (family == "dlog" && args.size() == 2) {
        return discrete_log(args[0], args[1]);
    }
    if (family == "graphiso" && args.size() == 1) {
        return graph_iso(args[0]);
    }
    if (family == "codeperm" && args.size() == 2) {
        return code_perm(args[0], args[1]);
    }
    if (family == "deck" && args.size() == 1) {
        return deck(args[0]);
    }
    throw InvalidParameterError("unknown action id: '" + id + "'");
}

std::string ActionSpec::to_config() const {
    std::ostringstream out;
    switch (kind) {
        case ActionKind::mod_add:
            out << "kind=modadd\nn=" << n << "\n";
            break;
        case ActionKind::discrete_log:
            out << "kind=dlog\np=" << p << "\ngenerator=" << generator << "\n";
            break;
        case ActionKind::graph_iso:
            out << "kind=graphiso\nn=" << n << "\n";
            break;
        case ActionKind::code_perm:
            out << "kind=codeperm\nn=" << n << "\nk=" << k << "\n";
            break;
        case ActionKind::deck:
            out << "kind=deck\nn=" << n << "\n";
            break;
    }
    return out.str();
}

ActionSpec ActionSpec::from_config(const std::string& text) {
    std::map<std::string, std::string> kv;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') {
            continue;
        }
        const size_t eq = line.find('=');
        if (eq == std::string::npos) {
            throw InvalidParameterError("config line missing '=': " + line);
        }
        kv[line.substr(0, eq)] = line.substr(eq + 1);
    }
    auto need = [&](const std::string& key) -> uint64_t {
        auto it = kv.find(key);
        if (it == kv.end()) {
            throw InvalidParameterError("config missing key: " + key);
        }
        return std::stoull(it->second);
    };
    const std::string kind = kv.count("kind") ? kv["kind"] : "";
    if (kind == "modadd") {
        return mod_add(need("n"));
    }
    if (kind == "dlog") {
        return discrete_log(need("p"), need("generator"));
    }
    if (kind == "graphiso") {
        return graph_iso(need("n"));
    }
    if (kind == "codeperm") {
        return code_perm(need("n"), need("k"));
    }
    if (kind == "deck") {
        return deck(need("n"));
    }
    throw InvalidParameterError("config has unknown kind: '" + kind + "'");
}

ActionDescriptor build_action(const ActionSpec& spec) {
    switch (spec.kind) {
        case ActionKind::mod_add:
            return build_mod_add(spec.n);
        case ActionKind::discrete_log:
            return build_discrete_log(spec.p, spec.generator);
        case ActionKind::graph_iso:
            return build_graph_iso(spec.n);
        case ActionKind::code_perm:
            return build_code_perm(spec.n, spec.k);
        case ActionKind::deck:
            return build_deck(spec.n);
    }
    throw InvalidParameterError("unknown action kind");
}

std::set<Bytes> orbit_of(const ActionDescriptor& a, const SetElement& x, uint64_t bound) {
    require_set_member(a, x);
    const ActionBackend& b = a.backend();
    if (b.group_order() > bound) {
        throw EnumerationBoundError("orbit_of: |G| exceeds bound for " + a.id());
    }
    std::set<Bytes> orbit;
    for (uint64_t i = 0; i < b.group_order(); ++i) {
        orbit.insert(b.apply(b.group_element_at(i), x).bytes);
    }
    return orbit;
}

bool same_orbit(const ActionDescriptor& a, const SetElement& x, const SetElement& y,
                uint64_t bound) {
    require_set_member(a, y);
    return orbit_of(a, x, bound).count(y.bytes) > 0;
}

OrbitPartition orbit_partition(const ActionDescriptor& a, uint64_t bound) {
    const ActionBackend& b = a.backend();
    if (b.set_size() > bound || b.group_order() > bound) {
        throw EnumerationBoundError("orbit_partition: sizes exceed bound for " + a.id());
    }
    OrbitPartition part;
    std::map<Bytes, uint32_t> assigned;
    part.orbit_of_element.resize(b.set_size());
    for (uint64_t xi = 0; xi < b.set_size(); ++xi) {
        const SetElement x = b.set_element_at(xi);
        auto it = assigned.find(x.bytes);
        if (it != assigned.end()) {
            part.orbit_of_element[xi] = it->second;
            continue;
        }
        const uint32_t orbit_index = static_cast<uint32_t>(part.orbits.size());
        std::set<Bytes> orbit = orbit_of(a, x, bound);
        for (const Bytes& member : orbit) {
            assigned.emplace(member, orbit_index);
        }
        part.orbit_of_element[xi] = orbit_index;
        part.orbits.push_back(std::move(orbit));
    }
    return part;
}

namespace {

// Set restricted to one orbit; group and action are delegated to the base.
// Free base + transitive restriction makes the result regular.
class OrbitRestrictedAction final : public ActionBackend {
public:
    OrbitRestrictedAction(ActionDescriptor base, SetElement x0, std::set<Bytes> orbit)
        : base_(std::move(base)), x0_(std::move(x0)),
          elements_(orbit.begin(), orbit.end()), member_(std::move(orbit)) {}

    std::string id() const override {
        return base_.id() + "@orbit-" + hash_hex(x0_.bytes).substr(0, 8);
    }
    uint32_t lambda() const override { return base_.lambda(); }
    ActionProperties properties() const override {
        const bool free = base_.properties().free;
        return {true, free, free};
    }

    bool group_member(const GroupElement& g) const override {
        return base_.backend().group_member(g);
    }
    GroupElement group_identity() const override { return base_.backend().group_identity(); }
    GroupElement group_compose(const GroupElement& g1, const GroupElement& g2) const override {
        return base_.backend().group_compose(g1, g2);
    }
    GroupElement group_inverse(const GroupElement& g) const override {
        return base_.backend().group_inverse(g);
    }
    uint64_t group_order() const override { return base_.backend().group_order(); }
    GroupElement group_element_at(uint64_t index) const override {
        return base_.backend().group_element_at(index);
    }
    GroupElement group_sample(RandomTape& tape) const override {
        return base_.backend().group_sample(tape);
    }
    uint32_t group_sample_bits() const override { return base_.backend().group_sample_bits(); }

    bool set_member(const SetElement& x) const override { return member_.count(x.bytes) > 0; }
    bool unique_representation() const override {
        return base_.backend().unique_representation();
    }
    Bytes set_canonical(const SetElement& x) const override {
        return base_.backend().set_canonical(x);
    }
    uint64_t set_size() const override { return elements_.size(); }
    SetElement set_element_at(uint64_t index) const override {
        return SetElement{elements_[index]};
    }
    SetElement set_sample(RandomTape& tape) const override {
        return SetElement{elements_[uniform_below(tape, elements_.size())]};
    }

    SetElement apply(const GroupElement& g, const SetElement& x) const override {
        return base_.backend().apply(g, x);
    }

    std::optional<SetElement> origin() const override { return x0_; }

private:
    ActionDescriptor base_;
    SetElement x0_;
    std::vector<Bytes> elements_;
    std::set<Bytes> member_;
};

class PowerAction final : public ActionBackend {
public:
    PowerAction(ActionDescriptor base, uint32_t q) : base_(std::move(base)), q_(q) {}

    std::string id() const override { return base_.id() + "^" + std::to_string(q_); }
    uint32_t lambda() const override { return base_.lambda() * q_; }
    ActionProperties properties() const override {
        const ActionProperties p = base_.properties();
        const bool transitive = p.transitive && (q_ == 1 || base_.set_size() == 1);
        return {transitive, p.free, transitive && p.free};
    }

    bool group_member(const GroupElement& g) const override {
        return base_.backend().group_member(g);
    }
    GroupElement group_identity() const override { return base_.backend().group_identity(); }
    GroupElement group_compose(const GroupElement& g1, const GroupElement& g2) const override {
        return base_.backend().group_compose(g1, g2);
    }
    GroupElement group_inverse(const GroupElement& g) const override {
        return base_.backend().group_inverse(g);
    }
    uint64_t group_order() const override { return base_.backend().group_order(); }
    GroupElement group_element_at(uint64_t index) const override {
        return base_.backend().group_element_at(index);
    }
    GroupElement group_sample(RandomTape& tape) const override {
        return base_.backend().group_sample(tape);
    }
    uint32_t group_sample_bits() const override { return base_.backend().group_sample_bits(); }

    bool set_member(const SetElement& x) const override {
        std::vector<SetElement> parts;
        if (!split(x, parts)) {
            return false;
        }
        for (const SetElement& part : parts) {
            if (!base_.backend().set_member(part)) {
                return false;
            }
        }
        return true;
    }
    bool unique_representation() const override {
        return base_.backend().unique_representation();
    }
    Bytes set_canonical(const SetElement& x) const override {
        std::vector<SetElement> parts;
        if (!split(x, parts)) {
            throw MembershipError("power action tuple malformed");
        }
        Bytes out;
        for (const SetElement& part : parts) {
            out += base_.backend().set_canonical(part);
        }
        return out;
    }
    uint64_t set_size() const override {
        uint64_t size = 1;
        for (uint32_t i = 0; i < q_; ++i) {
            size *= base_.set_size();
        }
        return size;
    }
    SetElement set_element_at(uint64_t index) const override {
        const uint64_t base_size = base_.set_size();
        std::vector<SetElement> parts(q_);
        for (uint32_t i = q_; i-- > 0;) {
            parts[i] = base_.backend().set_element_at(index % base_size);
            index /= base_size;
        }
        return join(parts);
    }
    SetElement set_sample(RandomTape& tape) const override {
        std::vector<SetElement> parts;
        parts.reserve(q_);
        for (uint32_t i = 0; i < q_; ++i) {
            parts.push_back(base_.backend().set_sample(tape));
        }
        return join(parts);
    }

    SetElement apply(const GroupElement& g, const SetElement& x) const override {
        std::vector<SetElement> parts;
        if (!split(x, parts)) {
            throw MembershipError("power action tuple malformed");
        }
        std::vector<SetElement> out;
        out.reserve(q_);
        for (const SetElement& part : parts) {
            out.push_back(base_.backend().apply(g, part));
        }
        return join(out);
    }

    static SetElement join(const std::vector<SetElement>& parts) {
        Bytes out;
        for (const SetElement& part : parts) {
            append_be32(out, static_cast<uint32_t>(part.bytes.size()));
            out += part.bytes;
        }
        return SetElement{out};
    }
    bool split(const SetElement& x, std::vector<SetElement>& parts) const {
        parts.clear();
        size_t offset = 0;
        for (uint32_t i = 0; i < q_; ++i) {
            if (offset + 4 > x.bytes.size()) {
                return false;
            }
            const uint32_t len = read_be32(x.bytes, offset);
            offset += 4;
            if (offset + len > x.bytes.size()) {
                return false;
            }
            parts.push_back(SetElement{x.bytes.substr(offset, len)});
            offset += len;
        }
        return offset == x.bytes.size();
    }

private:
    ActionDescriptor base_;
    uint32_t q_;
};

}  // namespace

ActionDescriptor restrict_to_orbit(const ActionDescriptor& a, const SetElement& x0,
                                   uint64_t bound) {
    if (!a.properties().free) {
        throw NotFreeError("restrict_to_orbit: action " + a.id() + " is not free");
    }
    require_set_member(a, x0);
    std::set<Bytes> orbit = orbit_of(a, x0, bound);
    return ActionDescriptor(
        std::make_shared<OrbitRestrictedAction>(a, x0, std::move(orbit)));
}

ActionDescriptor power_action(const ActionDescriptor& a, uint32_t q) {
    if (q < 1) {
        throw InvalidParameterError("power_action: q must be >= 1");
    }
    return ActionDescriptor(std::make_shared<PowerAction>(a, q));
}

SetElement tuple_element(const ActionDescriptor& base, const std::vector<SetElement>& parts) {
    for (const SetElement& part : parts) {
        require_set_member(base, part);
    }
    Bytes out;
    for (const SetElement& part : parts) {
        append_be32(out, static_cast<uint32_t>(part.bytes.size()));
        out += part.bytes;
    }
    return SetElement{out};
}

std::vector<SetElement> tuple_parts(const ActionDescriptor& base, uint32_t q,
                                    const SetElement& x) {
    (void)base;
    std::vector<SetElement> parts;
    size_t offset = 0;
    for (uint32_t i = 0; i < q; ++i) {
        if (offset + 4 > x.bytes.size()) {
            throw MembershipError("tuple encoding truncated");
        }
        const uint32_t len = read_be32(x.bytes, offset);
        offset += 4;
        if (offset + len > x.bytes.size()) {
            throw MembershipError("tuple encoding truncated");
        }
        parts.push_back(SetElement{x.bytes.substr(offset, len)});
        offset += len;
    }
    return parts;
}

}  // namespace gac
