#include "gwb/workbench/filter.hpp"

#include "gwb/properties.hpp"

#include <cctype>
#include <cmath>
#include <memory>
#include <vector>

namespace gwb::workbench
{
    FilterError::FilterError(const std::string &message, std::size_t position) :
        std::runtime_error("filter: " + message + " at position " + std::to_string(position)),
        position_(position)
    {
    }

    namespace
    {
        /// Arithmetic over n, compiled to a small tree.
        struct Expr
        {
            enum class Kind
            {
                number,
                variable,
                add,
                sub,
                mul,
                div,
                neg,
                log2
            };

            Kind kind = Kind::number;
            double value = 0;
            std::unique_ptr<Expr> lhs, rhs;

            auto eval(double n) const -> double
            {
                switch (kind) {
                case Kind::number: return value;
                case Kind::variable: return n;
                case Kind::add: return lhs->eval(n) + rhs->eval(n);
                case Kind::sub: return lhs->eval(n) - rhs->eval(n);
                case Kind::mul: return lhs->eval(n) * rhs->eval(n);
                case Kind::div: return lhs->eval(n) / rhs->eval(n);
                case Kind::neg: return -lhs->eval(n);
                case Kind::log2: return std::log2(lhs->eval(n));
                }
                return 0;
            }
        };

        class Parser
        {
        public:
            explicit Parser(std::string_view text) :
                text_(text)
            {
            }

            auto predicate() -> GraphPredicate
            {
                skip_space();
                if (pos_ == text_.size())
                    return [](const Graph &) { return true; };

                std::vector<GraphPredicate> terms{term()};
                skip_space();
                while (pos_ < text_.size()) {
                    expect('&');
                    terms.push_back(term());
                    skip_space();
                }
                return [terms = std::move(terms)](const Graph &g) {
                    for (const auto &t : terms)
                        if (! t(g))
                            return false;
                    return true;
                };
            }

            auto standalone_expression() -> std::shared_ptr<Expr>
            {
                auto e = std::shared_ptr<Expr>(sum().release());
                skip_space();
                if (pos_ != text_.size())
                    throw FilterError("unexpected '" + std::string(1, text_[pos_]) + "'", pos_);
                return e;
            }

        private:
            void skip_space()
            {
                while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
                    ++pos_;
            }

            auto peek() -> char
            {
                skip_space();
                return pos_ < text_.size() ? text_[pos_] : '\0';
            }

            void expect(char c)
            {
                if (peek() != c)
                    throw FilterError(std::string("expected '") + c + "'", pos_);
                ++pos_;
            }

            auto name() -> std::string
            {
                skip_space();
                std::size_t start = pos_;
                while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '-'))
                    ++pos_;
                if (start == pos_)
                    throw FilterError("expected predicate name", pos_);
                return std::string(text_.substr(start, pos_ - start));
            }

            auto integer_argument() -> int
            {
                expect('(');
                skip_space();
                std::size_t start = pos_;
                while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                    ++pos_;
                if (start == pos_)
                    throw FilterError("expected non-negative integer", pos_);
                int value = std::stoi(std::string(text_.substr(start, pos_ - start)));
                expect(')');
                return value;
            }

            auto term() -> GraphPredicate
            {
                if (peek() == '!') {
                    ++pos_;
                    auto inner = term();
                    return [inner](const Graph &g) { return ! inner(g); };
                }

                const std::size_t at = (skip_space(), pos_);
                const std::string id = name();
                if (id == "cubic")
                    return [](const Graph &g) { return g.min_degree() == 3 && g.max_degree() == 3; };
                if (id == "subcubic")
                    return [](const Graph &g) { return g.max_degree() <= 3; };
                if (id == "bipartite")
                    return [](const Graph &g) { return is_bipartite(g); };
                if (id == "triangle-free")
                    return [](const Graph &g) { return is_triangle_free(g); };
                if (id == "planar")
                    return [](const Graph &g) { return is_planar(g); };
                if (id == "non-complete")
                    return [](const Graph &g) { return ! g.is_complete(); };
                if (id == "regular") {
                    int r = integer_argument();
                    return [r](const Graph &g) { return g.order() > 0 && g.min_degree() == r && g.max_degree() == r; };
                }
                if (id == "max-degree") {
                    int d = integer_argument();
                    return [d](const Graph &g) { return g.max_degree() <= d; };
                }
                if (id == "order") {
                    int n = integer_argument();
                    return [n](const Graph &g) { return g.order() == n; };
                }
                if (id == "connected") {
                    if (peek() != '(')
                        return [](const Graph &g) { return is_connected(g); };
                    int k = integer_argument();
                    return [k](const Graph &g) { return vertex_connectivity(g) >= k; };
                }
                if (id == "edge-connected") {
                    int l = integer_argument();
                    return [l](const Graph &g) { return edge_connectivity(g) >= l; };
                }
                if (id == "min-degree") {
                    expect('(');
                    std::shared_ptr<Expr> e(sum().release());
                    expect(')');
                    return [e](const Graph &g) {
                        double bound = std::ceil(e->eval(g.order()) - 1e-9);
                        return g.min_degree() >= bound;
                    };
                }
                throw FilterError("unknown predicate '" + id + "'", at);
            }

            auto make(Expr::Kind kind, std::unique_ptr<Expr> lhs, std::unique_ptr<Expr> rhs = nullptr) -> std::unique_ptr<Expr>
            {
                auto e = std::make_unique<Expr>();
                e->kind = kind;
                e->lhs = std::move(lhs);
                e->rhs = std::move(rhs);
                return e;
            }

            auto sum() -> std::unique_ptr<Expr>
            {
                auto e = product();
                while (peek() == '+' || peek() == '-') {
                    char op = text_[pos_++];
                    e = make(op == '+' ? Expr::Kind::add : Expr::Kind::sub, std::move(e), product());
                }
                return e;
            }

            auto product() -> std::unique_ptr<Expr>
            {
                auto e = unary();
                while (peek() == '*' || peek() == '/') {
                    char op = text_[pos_++];
                    e = make(op == '*' ? Expr::Kind::mul : Expr::Kind::div, std::move(e), unary());
                }
                return e;
            }

            auto unary() -> std::unique_ptr<Expr>
            {
                if (peek() == '-') {
                    ++pos_;
                    return make(Expr::Kind::neg, unary());
                }
                return atom();
            }

            auto atom() -> std::unique_ptr<Expr>
            {
                char c = peek();
                if (c == '(') {
                    ++pos_;
                    auto e = sum();
                    expect(')');
                    return e;
                }
                if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
                    std::size_t start = pos_;
                    while (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.'))
                        ++pos_;
                    auto e = std::make_unique<Expr>();
                    try {
                        e->value = std::stod(std::string(text_.substr(start, pos_ - start)));
                    }
                    catch (const std::exception &) {
                        throw FilterError("bad number", start);
                    }
                    return e;
                }
                if (std::isalpha(static_cast<unsigned char>(c))) {
                    std::size_t start = pos_;
                    while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_])))
                        ++pos_;
                    auto id = text_.substr(start, pos_ - start);
                    if (id == "n") {
                        auto e = std::make_unique<Expr>();
                        e->kind = Expr::Kind::variable;
                        return e;
                    }
                    if (id == "log2") {
                        expect('(');
                        auto inner = sum();
                        expect(')');
                        return make(Expr::Kind::log2, std::move(inner));
                    }
                    throw FilterError("unknown identifier '" + std::string(id) + "'", start);
                }
                throw FilterError(c ? std::string("unexpected '") + c + "'" : "unexpected end of expression", pos_);
            }

            std::string_view text_;
            std::size_t pos_ = 0;
        };
    }

    auto compile_filter(std::string_view expr) -> GraphPredicate
    {
        return Parser(expr).predicate();
    }

    auto evaluate_in_n(std::string_view expr, int n) -> double
    {
        return Parser(expr).standalone_expression()->eval(n);
    }
}
