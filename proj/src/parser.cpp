#include "lcone/parser.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <optional>
#include <sstream>

#include "lcone/errors.hpp"

namespace lcone {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> toks;
    std::string cur;
    for (char c : line) {
        if (c == '#') break;
        if (std::isspace(static_cast<unsigned char>(c)) || c == ',' ) {
            if (!cur.empty()) toks.push_back(std::move(cur)), cur.clear();
        } else if (c == '[' || c == ']') {
            if (!cur.empty()) toks.push_back(std::move(cur)), cur.clear();
            toks.push_back(std::string(1, c));
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) toks.push_back(std::move(cur));
    return toks;
}

double parse_double(const std::string& s, int line) {
    try {
        size_t pos = 0;
        double v = std::stod(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw ParseError("expected a number, got '" + s + "'", line);
    }
}

int parse_int(const std::string& s, int line) {
    int v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || p != s.data() + s.size())
        throw ParseError("expected an integer, got '" + s + "'", line);
    return v;
}

int parse_qubit(const std::string& tok, int line) {
    if (tok.size() < 2 || tok[0] != 'q')
        throw ParseError("expected qubit token 'q<idx>', got '" + tok + "'", line);
    return parse_int(tok.substr(1), line);
}

// key=value lookup on header tokens
std::string header_value(const std::vector<std::string>& toks, const std::string& key,
                         int line) {
    for (const auto& t : toks) {
        auto eq = t.find('=');
        if (eq != std::string::npos && t.substr(0, eq) == key) return t.substr(eq + 1);
    }
    throw ParseError("layout line missing '" + key + "='", line);
}

CMatrix embed_on_targets(const CMatrix& u, const std::vector<int>& gate_targets,
                         const std::vector<int>& union_targets) {
    int k = static_cast<int>(union_targets.size());
    // position of each gate target inside union_targets, qubit 0 of the gate
    // being the most significant bit (row-major matrix convention).
    std::vector<int> pos;
    for (int t : gate_targets) {
        for (int i = 0; i < k; ++i)
            if (union_targets[i] == t) pos.push_back(i);
    }
    int dim = 1 << k;
    CMatrix out(dim);
    int g = static_cast<int>(gate_targets.size());
    for (int r = 0; r < dim; ++r) {
        for (int c = 0; c < dim; ++c) {
            bool ok = true;
            for (int i = 0; i < k; ++i) {
                bool is_target = false;
                for (int p : pos)
                    if (p == i) is_target = true;
                if (!is_target && (((r >> (k - 1 - i)) & 1) != ((c >> (k - 1 - i)) & 1)))
                    ok = false;
            }
            if (!ok) continue;
            int rt = 0, ct = 0;
            for (int j = 0; j < g; ++j) {
                rt = (rt << 1) | ((r >> (k - 1 - pos[j])) & 1);
                ct = (ct << 1) | ((c >> (k - 1 - pos[j])) & 1);
            }
            out(r, c) = u(rt, ct);
        }
    }
    return out;
}

// Appends `gate` after whatever the cluster already applies in this layer.
void merge_intra(std::vector<IntraGate>& gates, IntraGate gate) {
    for (auto& existing : gates) {
        if (existing.cluster != gate.cluster) continue;
        std::vector<int> uni = existing.targets;
        for (int t : gate.targets)
            if (std::find(uni.begin(), uni.end(), t) == uni.end()) uni.push_back(t);
        std::sort(uni.begin(), uni.end());
        CMatrix a = embed_on_targets(existing.unitary, existing.targets, uni);
        CMatrix b = embed_on_targets(gate.unitary, gate.targets, uni);
        existing.targets = uni;
        existing.unitary = b * a;  // `gate` applies after `existing`
        return;
    }
    gates.push_back(std::move(gate));
}

// Applies first in the layer's intra slot: composed as existing * gate.
void merge_intra_before(std::vector<IntraGate>& gates, IntraGate gate) {
    for (auto& existing : gates) {
        if (existing.cluster != gate.cluster) continue;
        std::vector<int> uni = existing.targets;
        for (int t : gate.targets)
            if (std::find(uni.begin(), uni.end(), t) == uni.end()) uni.push_back(t);
        std::sort(uni.begin(), uni.end());
        CMatrix a = embed_on_targets(existing.unitary, existing.targets, uni);
        CMatrix b = embed_on_targets(gate.unitary, gate.targets, uni);
        existing.targets = uni;
        existing.unitary = a * b;
        return;
    }
    gates.push_back(std::move(gate));
}

CMatrix single_qubit(cplx a00, cplx a01, cplx a10, cplx a11) {
    CMatrix m(2);
    m(0, 0) = a00;
    m(0, 1) = a01;
    m(1, 0) = a10;
    m(1, 1) = a11;
    return m;
}

}  // namespace

cplx parse_complex(const std::string& token) {
    std::string s = token;
    if (s.empty()) throw ParseError("empty complex literal");
    if (s.front() == '(') {
        auto comma = s.find(';');
        if (comma == std::string::npos) comma = s.find(',');
        if (s.back() != ')' || comma == std::string::npos)
            throw ParseError("malformed complex literal '" + token + "'");
        return {std::stod(s.substr(1, comma - 1)), std::stod(s.substr(comma + 1, s.size() - comma - 2))};
    }
    bool imag = false;
    if (s.back() == 'i' || s.back() == 'j') {
        imag = true;
        s.pop_back();
    }
    if (!imag) {
        try {
            size_t pos = 0;
            double v = std::stod(s, &pos);
            if (pos == s.size()) return {v, 0.0};
        } catch (const std::exception&) {}
        throw ParseError("malformed complex literal '" + token + "'");
    }
    // s is now the "a+b" or "b" part of a+bi / bi
    // find the split sign (not at position 0, not after an exponent marker)
    for (size_t i = s.size(); i-- > 1;) {
        if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
            double re = std::stod(s.substr(0, i));
            std::string im = s.substr(i);
            if (im == "+") return {re, 1.0};
            if (im == "-") return {re, -1.0};
            return {re, std::stod(im)};
        }
    }
    if (s.empty() || s == "+") return {0.0, 1.0};
    if (s == "-") return {0.0, -1.0};
    return {0.0, std::stod(s)};
}

std::string format_complex(cplx z) {
    char buf[64];
    snprintf(buf, sizeof(buf), "%.17g%+.17gi", z.real(), z.imag());
    return buf;
}

ClusteredCircuit parse_circuit(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;

    std::optional<ClusteredCircuit> circuit;
    std::optional<Layer> layer;
    cplx phase{1.0, 0.0};

    auto flush_layer = [&]() {
        if (layer) {
            circuit->add_layer(std::move(*layer));
            layer.reset();
        }
    };

    while (std::getline(in, line)) {
        ++lineno;
        auto toks = tokenize(line);
        if (toks.empty()) continue;
        const std::string& head = toks[0];

        if (head == "layout") {
            if (circuit) throw ParseError("duplicate layout line", lineno);
            if (toks.size() < 2) throw ParseError("layout kind missing", lineno);
            int d = parse_int(header_value(toks, "d", lineno), lineno);
            if (toks[1] == "lattice") {
                int dim = parse_int(header_value(toks, "D", lineno), lineno);
                std::string ext = header_value(toks, "extents", lineno);
                std::vector<int> extents;
                size_t start = 0;
                while (start <= ext.size()) {
                    auto x = ext.find('x', start);
                    std::string part = ext.substr(start, x == std::string::npos ? x : x - start);
                    extents.push_back(parse_int(part, lineno));
                    if (x == std::string::npos) break;
                    start = x + 1;
                }
                if (static_cast<int>(extents.size()) != dim)
                    throw ParseError("extents count does not match D", lineno);
                circuit.emplace(ClusterLayout::lattice(extents, d));
            } else if (toks[1] == "all_to_all") {
                int n = parse_int(header_value(toks, "N", lineno), lineno);
                circuit.emplace(ClusterLayout::all_to_all(n, d));
            } else {
                throw ParseError("unknown layout kind '" + toks[1] + "'", lineno);
            }
            continue;
        }

        if (!circuit) throw ParseError("expected layout line before '" + head + "'", lineno);

        if (head == "layer") {
            flush_layer();
            layer.emplace();
            continue;
        }
        if (!layer) throw ParseError("gate line outside a layer", lineno);

        if (head == "inter") {
            if (toks.size() < 4) throw ParseError("malformed inter line", lineno);
            const std::string& spec = toks[1];
            int qa = parse_qubit(toks[2], lineno);
            int qb = parse_qubit(toks[3], lineno);
            if (spec == "CZ" || spec == "CNOT") {
                // canonical family expansion, global phase e^{i pi/4}
                phase *= std::polar(1.0, M_PI / 4.0);
                const ClusterLayout& lay = circuit->layout();
                InterGate g;
                g.qubit_a = qa;
                g.qubit_b = qb;
                if (spec == "CZ") {
                    // CZ = e^{i pi/4} (Sdg x Sdg) ZZ(pi/2)
                    g.pauli_a = PauliOp::Z;
                    g.pauli_b = PauliOp::Z;
                    g.theta = M_PI / 2.0;
                    layer->inter.push_back(g);
                    CMatrix sdg = single_qubit(1.0, 0.0, 0.0, cplx{0.0, -1.0});
                    merge_intra_before(layer->intra, {lay.cluster_of(qa), {qa}, sdg});
                    merge_intra_before(layer->intra, {lay.cluster_of(qb), {qb}, sdg});
                } else {
                    // CNOT = e^{i pi/4} (Rz(pi/2) x Rx(pi/2)) ZX(-pi/2)
                    g.pauli_a = PauliOp::Z;
                    g.pauli_b = PauliOp::X;
                    g.theta = -M_PI / 2.0;
                    layer->inter.push_back(g);
                    cplx em = std::polar(1.0, -M_PI / 4.0), ep = std::polar(1.0, M_PI / 4.0);
                    CMatrix rz = single_qubit(em, 0.0, 0.0, ep);
                    double c = std::cos(M_PI / 4.0);
                    CMatrix rx = single_qubit(c, cplx{0.0, -c}, cplx{0.0, -c}, c);
                    merge_intra_before(layer->intra, {lay.cluster_of(qa), {qa}, rz});
                    merge_intra_before(layer->intra, {lay.cluster_of(qb), {qb}, rx});
                }
            } else {
                auto open = spec.find('(');
                if (spec.size() < 5 || open != 2 || spec.back() != ')')
                    throw ParseError("malformed inter gate '" + spec + "'", lineno);
                InterGate g;
                g.pauli_a = pauli_from_char(spec[0]);
                g.pauli_b = pauli_from_char(spec[1]);
                g.theta = parse_double(spec.substr(3, spec.size() - 4), lineno);
                g.qubit_a = qa;
                g.qubit_b = qb;
                layer->inter.push_back(g);
            }
            continue;
        }

        if (head == "intra") {
            if (toks.size() < 5 || toks[1].size() < 2 || toks[1][0] != 'c')
                throw ParseError("malformed intra line", lineno);
            IntraGate g;
            g.cluster = parse_int(toks[1].substr(1), lineno);
            size_t i = 2;
            if (toks[i] != "[") throw ParseError("expected '[' before intra matrix", lineno);
            std::vector<cplx> entries;
            for (++i; i < toks.size() && toks[i] != "]"; ++i) {
                try {
                    entries.push_back(parse_complex(toks[i]));
                } catch (const ParseError& e) {
                    throw ParseError(e.what(), lineno);
                }
            }
            if (i >= toks.size()) throw ParseError("unterminated intra matrix", lineno);
            for (++i; i < toks.size(); ++i) g.targets.push_back(parse_qubit(toks[i], lineno));
            int dim = 1 << g.targets.size();
            if (static_cast<int>(entries.size()) != dim * dim)
                throw ParseError("intra matrix has " + std::to_string(entries.size()) +
                                     " entries, expected " + std::to_string(dim * dim),
                                 lineno);
            g.unitary = CMatrix(dim, std::move(entries));
            merge_intra(layer->intra, std::move(g));
            continue;
        }

        throw ParseError("unknown directive '" + head + "'", lineno);
    }
    if (!circuit) throw ParseError("no layout line found");
    flush_layer();
    circuit->multiply_global_phase(phase);
    return std::move(*circuit);
}

Observable parse_observable(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    std::vector<ObservableTerm> terms;
    while (std::getline(in, line)) {
        ++lineno;
        auto toks = tokenize(line);
        if (toks.empty()) continue;
        if (toks[0] != "term") throw ParseError("expected 'term' line", lineno);
        if (toks.size() < 2) throw ParseError("term missing coefficient", lineno);
        ObservableTerm t;
        t.coeff = parse_double(toks[1], lineno);
        if (t.coeff == 0.0) throw ParseError("zero coefficient", lineno);
        for (size_t i = 2; i < toks.size(); ++i) {
            const std::string& tok = toks[i];
            if (tok.size() < 3 || tok[1] != 'q')
                throw ParseError("expected '<letter>q<idx>', got '" + tok + "'", lineno);
            PauliOp p = pauli_from_char(tok[0]);
            int q = parse_int(tok.substr(2), lineno);
            if (t.pauli.letters().count(q))
                throw ParseError("qubit q" + std::to_string(q) + " repeated in term", lineno);
            t.pauli.set(q, p);
        }
        terms.push_back(std::move(t));
    }
    return Observable(std::move(terms));
}

std::string serialize_circuit(const ClusteredCircuit& circuit) {
    std::ostringstream out;
    const ClusterLayout& lay = circuit.layout();
    if (lay.kind() == LayoutKind::Lattice) {
        out << "layout lattice D=" << lay.dim() << " extents=";
        for (size_t i = 0; i < lay.extents().size(); ++i)
            out << (i ? "x" : "") << lay.extents()[i];
        out << " d=" << lay.cluster_size() << "\n";
    } else {
        out << "layout all_to_all N=" << lay.num_clusters() << " d=" << lay.cluster_size()
            << "\n";
    }
    char num[64];
    for (const auto& layer : circuit.layers()) {
        out << "layer\n";
        for (const auto& g : layer.inter) {
            snprintf(num, sizeof(num), "%.17g", g.theta);
            out << "inter " << pauli_char(g.pauli_a) << pauli_char(g.pauli_b) << "(" << num
                << ") q" << g.qubit_a << " q" << g.qubit_b << "\n";
        }
        for (const auto& g : layer.intra) {
            out << "intra c" << g.cluster << " [";
            for (const auto& v : g.unitary.data()) out << " " << format_complex(v);
            out << " ]";
            for (int q : g.targets) out << " q" << q;
            out << "\n";
        }
    }
    return out.str();
}

std::string serialize_observable(const Observable& obs) {
    std::ostringstream out;
    char num[64];
    for (const auto& t : obs.terms()) {
        snprintf(num, sizeof(num), "%.17g", t.coeff);
        out << "term " << num;
        for (auto& [q, p] : t.pauli.letters()) out << " " << pauli_char(p) << "q" << q;
        out << "\n";
    }
    return out.str();
}

}  // namespace lcone
