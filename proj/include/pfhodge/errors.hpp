#ifndef PFHODGE_ERRORS_HPP
#define PFHODGE_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pfhodge {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    ParseError(std::size_t pos, const std::string& msg)
        : Error("parse error at position " + std::to_string(pos) + ": " + msg), position(pos) {}
    std::size_t position;
};

class IrregularSingularity : public Error {
public:
    explicit IrregularSingularity(const std::string& point)
        : Error("irregular singular point at " + point), point(point) {}
    std::string point;
};

class IrrationalExponents : public Error {
public:
    IrrationalExponents(const std::string& point, const std::string& cofactor)
        : Error("irrational exponents at " + point + ": indicial cofactor " + cofactor),
          point(point), cofactor(cofactor) {}
    std::string point;
    std::string cofactor;
};

class InconsistentProfile : public Error {
public:
    using Error::Error;
};

class MissingAnnotation : public Error {
public:
    MissingAnnotation(const std::string& msg, std::vector<std::string> pts)
        : Error(msg), points(std::move(pts)) {}
    std::vector<std::string> points;
};

class CoverError : public Error {
public:
    using Error::Error;
};

}  // namespace pfhodge

#endif
