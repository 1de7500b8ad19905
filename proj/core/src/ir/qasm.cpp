// Copyright 2026 The qgo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qgo/ir/qasm.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "qgo/error.hpp"
#include "qgo/ir/decompose.hpp"

namespace qgo::ir {
namespace {

enum class Tok { Ident, Number, String, Symbol, End };

struct Token {
    Tok kind{Tok::End};
    std::string text;
    int line{0};
};

std::vector<Token> tokenize(std::string_view src) {
    std::vector<Token> out;
    int line = 1;
    std::size_t i = 0;
    while (i < src.size()) {
        const char ch = src[i];
        if (ch == '\n') {
            ++line;
            ++i;
        } else if (std::isspace(static_cast<unsigned char>(ch))) {
            ++i;
        } else if (ch == '/' && i + 1 < src.size() && src[i + 1] == '/') {
            while (i < src.size() && src[i] != '\n') {
                ++i;
            }
        } else if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
            std::size_t j = i;
            while (j < src.size() &&
                   (std::isalnum(static_cast<unsigned char>(src[j])) ||
                    src[j] == '_')) {
                ++j;
            }
            out.push_back({Tok::Ident, std::string(src.substr(i, j - i)), line});
            i = j;
        } else if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '.') {
            std::size_t j = i;
            while (j < src.size() &&
                   (std::isdigit(static_cast<unsigned char>(src[j])) ||
                    src[j] == '.')) {
                ++j;
            }
            if (j < src.size() && (src[j] == 'e' || src[j] == 'E')) {
                std::size_t k = j + 1;
                if (k < src.size() && (src[k] == '+' || src[k] == '-')) {
                    ++k;
                }
                if (k < src.size() &&
                    std::isdigit(static_cast<unsigned char>(src[k]))) {
                    j = k;
                    while (j < src.size() &&
                           std::isdigit(static_cast<unsigned char>(src[j]))) {
                        ++j;
                    }
                }
            }
            out.push_back({Tok::Number, std::string(src.substr(i, j - i)), line});
            i = j;
        } else if (ch == '"') {
            std::size_t j = src.find('"', i + 1);
            if (j == std::string_view::npos) {
                throw ParseError(line, "\"", "unterminated string");
            }
            out.push_back({Tok::String, std::string(src.substr(i + 1, j - i - 1)),
                           line});
            i = j + 1;
        } else if (ch == '-' && i + 1 < src.size() && src[i + 1] == '>') {
            out.push_back({Tok::Symbol, "->", line});
            i += 2;
        } else if (std::string_view("()[],;+-*/^{}").find(ch) !=
                   std::string_view::npos) {
            out.push_back({Tok::Symbol, std::string(1, ch), line});
            ++i;
        } else {
            throw ParseError(line, std::string(1, ch), "unexpected character");
        }
    }
    out.push_back({Tok::End, "<eof>", line});
    return out;
}

struct RegisterRef {
    int index; // -1 for the whole register
};

class Parser {
  public:
    explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

    Circuit run() {
        if (peek().kind == Tok::Ident && peek().text == "OPENQASM") {
            next();
            const Token v = next();
            if (v.kind != Tok::Number || v.text.rfind("2", 0) != 0) {
                throw ParseError(v.line, v.text, "only OpenQASM 2.0 is supported");
            }
            expect(";");
        }
        while (peek().kind != Tok::End) {
            statement();
        }
        if (!circuit_) {
            return Circuit(0, 0);
        }
        return std::move(*circuit_);
    }

  private:
    const Token &peek() const { return toks_[pos_]; }
    Token next() {
        Token t = toks_[pos_];
        if (t.kind != Tok::End) {
            ++pos_;
        }
        return t;
    }
    bool accept(std::string_view sym) {
        if (peek().kind == Tok::Symbol && peek().text == sym) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(std::string_view sym) {
        if (!accept(sym)) {
            throw ParseError(peek().line, peek().text,
                             "expected '" + std::string(sym) + "'");
        }
    }
    Token expect_ident() {
        if (peek().kind != Tok::Ident) {
            throw ParseError(peek().line, peek().text, "expected identifier");
        }
        return next();
    }
    int expect_int() {
        const Token t = next();
        int v = 0;
        const auto *end = t.text.data() + t.text.size();
        auto [p, ec] = std::from_chars(t.text.data(), end, v);
        if (t.kind != Tok::Number || ec != std::errc{} || p != end) {
            throw ParseError(t.line, t.text, "expected integer");
        }
        return v;
    }

    // expr := term (('+'|'-') term)*
    double expr() {
        double v = term();
        for (;;) {
            if (accept("+")) {
                v += term();
            } else if (accept("-")) {
                v -= term();
            } else {
                return v;
            }
        }
    }
    double term() {
        double v = power();
        for (;;) {
            if (accept("*")) {
                v *= power();
            } else if (accept("/")) {
                v /= power();
            } else {
                return v;
            }
        }
    }
    double power() {
        const double base = unary();
        if (accept("^")) {
            return std::pow(base, power());
        }
        return base;
    }
    double unary() {
        if (accept("-")) {
            return -unary();
        }
        if (accept("+")) {
            return unary();
        }
        return primary();
    }
    double primary() {
        const Token t = next();
        if (t.kind == Tok::Number) {
            double v = 0;
            const auto *end = t.text.data() + t.text.size();
            auto [p, ec] = std::from_chars(t.text.data(), end, v);
            if (p != end || (ec != std::errc{} && ec != std::errc::result_out_of_range)) {
                throw ParseError(t.line, t.text, "bad number");
            }
            return v;
        }
        if (t.kind == Tok::Symbol && t.text == "(") {
            const double v = expr();
            expect(")");
            return v;
        }
        if (t.kind == Tok::Ident) {
            if (t.text == "pi") {
                return std::numbers::pi;
            }
            static const std::pair<const char *, double (*)(double)> fns[] = {
                {"sin", [](double x) { return std::sin(x); }},
                {"cos", [](double x) { return std::cos(x); }},
                {"tan", [](double x) { return std::tan(x); }},
                {"exp", [](double x) { return std::exp(x); }},
                {"ln", [](double x) { return std::log(x); }},
                {"sqrt", [](double x) { return std::sqrt(x); }},
            };
            for (const auto &[name, fn] : fns) {
                if (t.text == name) {
                    expect("(");
                    const double v = expr();
                    expect(")");
                    return fn(v);
                }
            }
        }
        throw ParseError(t.line, t.text, "bad angle expression");
    }

    RegisterRef reg_ref(const std::string &expected_reg, int size) {
        const Token name = expect_ident();
        if (name.text != expected_reg) {
            throw ParseError(name.line, name.text, "unknown register");
        }
        if (accept("[")) {
            const Token at = peek();
            const int idx = expect_int();
            expect("]");
            if (idx < 0 || idx >= size) {
                throw ParseError(at.line, at.text, "qubit index out of range");
            }
            return {idx};
        }
        return {-1};
    }

    Circuit &circuit(const Token &at) {
        if (!circuit_) {
            throw ParseError(at.line, at.text, "statement before qreg");
        }
        return *circuit_;
    }

    void statement() {
        const Token head = expect_ident();
        const std::string &kw = head.text;
        if (kw == "include") {
            if (next().kind != Tok::String) {
                throw ParseError(head.line, kw, "include expects a file name");
            }
            expect(";");
        } else if (kw == "qreg" || kw == "creg") {
            declare(head);
        } else if (kw == "barrier") {
            // Parsed for validity, then dropped.
            do {
                reg_ref(qreg_, nq_);
            } while (accept(","));
            expect(";");
        } else if (kw == "measure") {
            measure(head);
        } else {
            apply(head);
        }
    }

    void declare(const Token &head) {
        const Token name = expect_ident();
        expect("[");
        const int size = expect_int();
        expect("]");
        expect(";");
        if (size < 0) {
            throw ParseError(name.line, name.text, "negative register size");
        }
        if (head.text == "qreg") {
            if (circuit_) {
                throw ParseError(head.line, name.text,
                                 "only one qreg is supported");
            }
            qreg_ = name.text;
            nq_ = size;
            circuit_.emplace(size, nc_);
        } else {
            if (!creg_.empty()) {
                throw ParseError(head.line, name.text,
                                 "only one creg is supported");
            }
            creg_ = name.text;
            nc_ = size;
            if (circuit_) {
                circuit_->set_measurements({}, nc_);
            }
        }
    }

    void measure(const Token &head) {
        Circuit &c = circuit(head);
        const RegisterRef q = reg_ref(qreg_, nq_);
        expect("->");
        if (creg_.empty() && peek().kind == Tok::Ident) {
            // Undeclared target register: implicitly sized like the qreg.
            creg_ = peek().text;
            nc_ = nq_;
        }
        if (c.num_clbits() != nc_) {
            c.set_measurements(c.measurements(), nc_);
        }
        const RegisterRef b = reg_ref(creg_, nc_);
        expect(";");
        try {
            if (q.index < 0 && b.index < 0) {
                if (nq_ != nc_) {
                    throw ParseError(head.line, head.text,
                                     "register sizes differ");
                }
                for (int i = 0; i < nq_; ++i) {
                    c.measure(i, i);
                }
            } else if (q.index >= 0 && b.index >= 0) {
                c.measure(q.index, b.index);
            } else {
                throw ParseError(head.line, head.text,
                                 "mixed register/bit measure");
            }
        } catch (const ParseError &) {
            throw;
        } catch (const InputError &e) {
            throw ParseError(head.line, head.text, e.what());
        }
    }

    void apply(const Token &head) {
        Circuit &c = circuit(head);
        const std::string &name = head.text;
        std::vector<double> args;
        if (accept("(")) {
            if (!accept(")")) {
                do {
                    args.push_back(expr());
                } while (accept(","));
                expect(")");
            }
        }
        std::vector<RegisterRef> operands;
        do {
            operands.push_back(reg_ref(qreg_, nq_));
        } while (accept(","));
        expect(";");

        const auto shape = signature(name);
        if (!shape) {
            throw ParseError(head.line, name, "unsupported gate");
        }
        const auto [nparams, nqubits] = *shape;
        if (static_cast<int>(args.size()) != nparams) {
            throw ParseError(head.line, name, "wrong number of parameters");
        }
        if (static_cast<int>(operands.size()) != nqubits) {
            throw ParseError(head.line, name, "wrong number of qubits");
        }
        try {
            if (nqubits == 1 && operands[0].index < 0) {
                for (int q = 0; q < nq_; ++q) {
                    emit(c, name, args, {q});
                }
                return;
            }
            std::vector<Qubit> qs;
            for (const auto &op : operands) {
                if (op.index < 0) {
                    throw ParseError(head.line, name,
                                     "register broadcast only for 1-qubit gates");
                }
                qs.push_back(op.index);
            }
            for (std::size_t i = 0; i < qs.size(); ++i) {
                for (std::size_t j = i + 1; j < qs.size(); ++j) {
                    if (qs[i] == qs[j]) {
                        throw ParseError(head.line, name, "repeated qubit");
                    }
                }
            }
            emit(c, name, args, qs);
        } catch (const ParseError &) {
            throw;
        } catch (const InputError &e) {
            throw ParseError(head.line, name, e.what());
        }
    }

    static std::optional<std::pair<int, int>> signature(const std::string &n) {
        if (n == "rx" || n == "ry" || n == "rz" || n == "u1" || n == "p") {
            return std::pair{1, 1};
        }
        if (n == "u3" || n == "u" || n == "U") {
            return std::pair{3, 1};
        }
        if (n == "u2") {
            return std::pair{2, 1};
        }
        if (n == "h" || n == "x" || n == "y" || n == "z" || n == "s" ||
            n == "sdg" || n == "t" || n == "tdg" || n == "sx" || n == "id") {
            return std::pair{0, 1};
        }
        if (n == "cx" || n == "CX" || n == "swap" || n == "cz") {
            return std::pair{0, 2};
        }
        if (n == "cp" || n == "cu1") {
            return std::pair{1, 2};
        }
        if (n == "ccx") {
            return std::pair{0, 3};
        }
        return std::nullopt;
    }

    static void emit(Circuit &c, const std::string &n,
                     const std::vector<double> &a, const std::vector<Qubit> &q) {
        constexpr double pi = std::numbers::pi;
        if (n == "rx") {
            c.add(Gate::rx(q[0], a[0]));
        } else if (n == "ry") {
            c.add(Gate::ry(q[0], a[0]));
        } else if (n == "rz" || n == "u1" || n == "p") {
            c.add(Gate::rz(q[0], a[0]));
        } else if (n == "u3" || n == "u" || n == "U") {
            c.add(Gate::u3(q[0], a[0], a[1], a[2]));
        } else if (n == "u2") {
            c.add(Gate::u3(q[0], pi / 2, a[0], a[1]));
        } else if (n == "h") {
            c.add(Gate::h(q[0]));
        } else if (n == "x") {
            c.add(Gate::x(q[0]));
        } else if (n == "y") {
            c.add(Gate::u3(q[0], pi, pi / 2, pi / 2));
        } else if (n == "z") {
            c.add(Gate::rz(q[0], pi));
        } else if (n == "s") {
            c.add(Gate::rz(q[0], pi / 2));
        } else if (n == "sdg") {
            c.add(Gate::rz(q[0], -pi / 2));
        } else if (n == "t") {
            c.add(Gate::rz(q[0], pi / 4));
        } else if (n == "tdg") {
            c.add(Gate::rz(q[0], -pi / 4));
        } else if (n == "sx") {
            c.add(Gate::rx(q[0], pi / 2));
        } else if (n == "id") {
            // no-op
        } else if (n == "cx" || n == "CX") {
            c.add(Gate::cnot(q[0], q[1]));
        } else if (n == "swap") {
            c.add(Gate::swap(q[0], q[1]));
        } else if (n == "cz") {
            append_cz(c, q[0], q[1]);
        } else if (n == "cp" || n == "cu1") {
            append_cphase(c, q[0], q[1], a[0]);
        } else if (n == "ccx") {
            append_ccx(c, q[0], q[1], q[2]);
        }
    }

    std::vector<Token> toks_;
    std::size_t pos_{0};
    std::optional<Circuit> circuit_;
    std::string qreg_;
    std::string creg_;
    int nq_{0};
    int nc_{0};
};

std::string fmt_angle(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

} // namespace

Circuit parse_qasm(std::string_view text) {
    return Parser(tokenize(text)).run();
}

std::string write_qasm(const Circuit &c) {
    std::ostringstream os;
    os << "OPENQASM 2.0;\ninclude \"qelib1.inc\";\n";
    os << "qreg q[" << c.num_qubits() << "];\n";
    if (c.num_clbits() > 0) {
        os << "creg c[" << c.num_clbits() << "];\n";
    }
    for (const Gate &g : c.gates()) {
        os << gate_name(g.kind);
        const auto angles = g.angles();
        if (!angles.empty()) {
            os << '(';
            for (std::size_t i = 0; i < angles.size(); ++i) {
                os << (i ? "," : "") << fmt_angle(angles[i]);
            }
            os << ')';
        }
        os << ' ';
        const auto w = g.wires();
        for (std::size_t i = 0; i < w.size(); ++i) {
            os << (i ? "," : "") << "q[" << w[i] << ']';
        }
        os << ";\n";
    }
    for (const Measurement &m : c.measurements()) {
        os << "measure q[" << m.qubit << "] -> c[" << m.clbit << "];\n";
    }
    return os.str();
}

} // namespace qgo::ir
