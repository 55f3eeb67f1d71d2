#ifndef WORDREP_GUARD_WORDREP_ERRORS_HH
#define WORDREP_GUARD_WORDREP_ERRORS_HH 1

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wordrep
{
    class DuplicateLabel : public std::invalid_argument
    {
    public:
        explicit DuplicateLabel(const std::string & label) :
            std::invalid_argument("duplicate vertex label '" + label + "'")
        {
        }
    };

    class UnknownEndpoint : public std::invalid_argument
    {
    public:
        explicit UnknownEndpoint(const std::string & label) :
            std::invalid_argument("unknown vertex '" + label + "'")
        {
        }
    };

    class SelfLoop : public std::invalid_argument
    {
    public:
        explicit SelfLoop(const std::string & label) :
            std::invalid_argument("self-loop at vertex '" + label + "'")
        {
        }
    };

    class SizeLimitExceeded : public std::length_error
    {
    public:
        using std::length_error::length_error;
    };

    class BudgetExceeded : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    class MissingLetter : public std::invalid_argument
    {
    public:
        explicit MissingLetter(std::size_t vertex) :
            std::invalid_argument("vertex " + std::to_string(vertex) + " does not occur in the word"),
            vertex(vertex)
        {
        }

        std::size_t vertex;
    };

    class CyclicInput : public std::invalid_argument
    {
    public:
        CyclicInput() :
            std::invalid_argument("orientation contains a directed cycle")
        {
        }
    };

    class OrientationConflict : public std::logic_error
    {
    public:
        using std::logic_error::logic_error;
    };

    class TraceSyntaxError : public std::runtime_error
    {
    public:
        TraceSyntaxError(std::size_t line, std::size_t column, const std::string & what) :
            std::runtime_error("trace line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
            line(line),
            column(column)
        {
        }

        std::size_t line, column;
    };

    class UnknownCopyReference : public std::runtime_error
    {
    public:
        UnknownCopyReference(std::size_t line, long copy_id) :
            std::runtime_error("trace line " + std::to_string(line) + ": copy " + std::to_string(copy_id) + " was never created"),
            line(line),
            copy_id(copy_id)
        {
        }

        std::size_t line;
        long copy_id;
    };
}

#endif
