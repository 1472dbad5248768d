/* errors.hpp */

#ifndef DMPF_ERRORS_HPP
#define DMPF_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <utility>

namespace dmpf {

/* Malformed input file; the message names the line or byte offset */
struct ParseError : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

/* Input parsed but violates a documented constraint */
struct ValidationError : std::runtime_error
{
    ValidationError(std::string field_, const std::string& what) :
        std::runtime_error(field_ + ": " + what), field(std::move(field_)) { }

    std::string field;
};

struct InvalidPoseError : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

struct InvalidSourceError : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

struct ParameterError : std::invalid_argument
{
    using std::invalid_argument::invalid_argument;
};

struct DegenerateDistanceError : std::domain_error
{
    using std::domain_error::domain_error;
};

struct IntegrityError : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

struct RankDeficiencyError : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

} /* namespace dmpf */

#endif /* DMPF_ERRORS_HPP */
