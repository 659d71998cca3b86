"""
Flask Web Application for the Surface Word Bialgebra

A JSON service that computes brackets, cobrackets and linked pairs of reduced
cyclic words over a surface symbol, and runs the bialgebra law suite.
"""

import logging

from flask import Flask, jsonify, request

from config import SERVICE_NAME, VERSION, Settings, configure_logging
from errors import SurfaceWordError
from surface_algebra import SurfaceLieBialgebra
from words import format_word, parse_letters

settings = Settings.from_env()

# Initialize Flask app
app = Flask(__name__)

# Configure logging
configure_logging(settings.log_level)
logger = logging.getLogger(__name__)


class RequestTooLarge(Exception):
    """A word or sample count exceeds the configured limit."""


def _error(error: str, message: str, status: int):
    return jsonify({'error': error, 'message': message}), status


def _require(data, *fields):
    """Return the requested fields of a JSON body, or None when one is missing."""
    if not isinstance(data, dict) or any(field not in data for field in fields):
        return None
    return [data[field] for field in fields]


def _check_length(*texts):
    for text in texts:
        length = len(parse_letters(str(text)))
        if length > settings.max_word_length:
            raise RequestTooLarge(
                f"Word of length {length} exceeds the limit of {settings.max_word_length} letters"
            )


def _service(surface_text, extended_windows: bool = None) -> SurfaceLieBialgebra:
    if extended_windows is None:
        extended_windows = settings.lp1_extended_windows
    return SurfaceLieBialgebra(str(surface_text), extended_windows=bool(extended_windows))


def _pair_json(pair):
    j, k = pair.exponents
    return {
        'type': int(pair.kind),
        'sign': pair.sign,
        'p_start': pair.p_occ.start,
        'p_length': pair.p_occ.length,
        'q_start': pair.q_occ.start,
        'q_length': pair.q_occ.length,
        'j': j,
        'k': k,
        'p_word': format_word(pair.p_word),
        'q_word': format_word(pair.q_word),
        'line': pair.format_line(),
    }


def _handle(compute):
    """Run ``compute`` and map library errors onto JSON error responses."""
    try:
        return compute()
    except RequestTooLarge as e:
        logger.warning(f"Rejected oversized request: {e}")
        return _error('Request too large', str(e), 413)
    except SurfaceWordError as e:
        logger.info(f"Invalid input: {type(e).__name__}: {e}")
        return _error(type(e).__name__, str(e), 400)
    except Exception as e:
        logger.error(f"Error while processing request: {e}")
        return _error('Internal server error', 'An error occurred while processing your request', 500)


@app.route('/api/bracket', methods=['POST'])
def api_bracket():
    """
    API endpoint for the bracket [left, right].

    Expects JSON payload with 'surface', 'left' and 'right' fields.
    """
    fields = _require(request.get_json(silent=True), 'surface', 'left', 'right')
    if fields is None:
        return _error('Invalid request', "Please provide 'surface', 'left' and 'right'", 400)
    surface, left, right = fields

    def compute():
        _check_length(left, right)
        service = _service(surface)
        result = service.bracket(left, right)
        logger.info(f"Bracket [{left}, {right}] over {service.surface}: {len(result)} terms")
        return jsonify({
            'success': True,
            'data': {
                'surface': service.surface.word.text,
                'left': service.parse(left).text,
                'right': service.parse(right).text,
                'terms': [
                    {'coeff': coeff, 'word': word.text} for word, coeff in result.sorted_terms()
                ],
                'text': result.format_text(),
            },
        })

    return _handle(compute)


@app.route('/api/cobracket', methods=['POST'])
def api_cobracket():
    """API endpoint for the cobracket of 'word'."""
    data = request.get_json(silent=True)
    fields = _require(data, 'surface', 'word')
    if fields is None:
        return _error('Invalid request', "Please provide 'surface' and 'word'", 400)
    surface, word = fields

    def compute():
        _check_length(word)
        service = _service(surface, data.get('extended_windows'))
        result = service.cobracket(word)
        return jsonify({
            'success': True,
            'data': {
                'surface': service.surface.word.text,
                'word': service.parse(word).text,
                'terms': [
                    {'coeff': coeff, 'left': left.text, 'right': right.text}
                    for (left, right), coeff in result.sorted_terms()
                ],
                'text': result.format_text(),
            },
        })

    return _handle(compute)


@app.route('/api/lp1', methods=['POST'])
def api_lp1():
    """API endpoint listing the linked pairs of subwords of 'word'."""
    data = request.get_json(silent=True)
    fields = _require(data, 'surface', 'word')
    if fields is None:
        return _error('Invalid request', "Please provide 'surface' and 'word'", 400)
    surface, word = fields

    def compute():
        _check_length(word)
        service = _service(surface, data.get('extended_windows'))
        pairs = service.lp1(word, nonzero_only=bool(data.get('nonzero_only', False)))
        return jsonify({
            'success': True,
            'data': {
                'surface': service.surface.word.text,
                'word': service.parse(word).text,
                'count': len(pairs),
                'nonzero_count': sum(1 for pair in pairs if pair.sign != 0),
                'pairs': [_pair_json(pair) for pair in pairs],
            },
        })

    return _handle(compute)


@app.route('/api/lp2', methods=['POST'])
def api_lp2():
    """API endpoint listing the linked pairs between powers of 'left' and 'right'."""
    data = request.get_json(silent=True)
    fields = _require(data, 'surface', 'left', 'right')
    if fields is None:
        return _error('Invalid request', "Please provide 'surface', 'left' and 'right'", 400)
    surface, left, right = fields

    def compute():
        _check_length(left, right)
        service = _service(surface)
        pairs = service.lp2(left, right, nonzero_only=bool(data.get('nonzero_only', False)))
        j_max, k_max = service.caps(left, right)
        return jsonify({
            'success': True,
            'data': {
                'surface': service.surface.word.text,
                'left': service.parse(left).text,
                'right': service.parse(right).text,
                'caps': {'j': j_max, 'k': k_max},
                'count': len(pairs),
                'nonzero_count': sum(1 for pair in pairs if pair.sign != 0),
                'pairs': [_pair_json(pair) for pair in pairs],
            },
        })

    return _handle(compute)


@app.route('/api/check', methods=['POST'])
def api_check():
    """
    API endpoint for the law suite.

    Expects 'surface'; 'max_len', 'samples', 'seed' and 'laws' are optional.
    A failing law is reported in the body with status 200.
    """
    data = request.get_json(silent=True)
    fields = _require(data, 'surface')
    if fields is None:
        return _error('Invalid request', "Please provide 'surface'", 400)
    (surface,) = fields
    try:
        max_len = int(data.get('max_len', 4))
        samples = int(data.get('samples', 20))
        seed = int(data.get('seed', 0))
    except (TypeError, ValueError):
        return _error('Invalid request', "'max_len', 'samples' and 'seed' must be integers", 400)
    laws = data.get('laws', 'all')
    if max_len < 1 or samples < 0:
        return _error('Invalid request', "'max_len' must be positive and 'samples' non-negative", 400)

    def compute():
        if samples > settings.max_check_samples:
            raise RequestTooLarge(f"samples={samples} exceeds the limit of {settings.max_check_samples}")
        if max_len > settings.max_word_length:
            raise RequestTooLarge(f"max_len={max_len} exceeds the limit of {settings.max_word_length}")
        service = _service(surface)
        try:
            summaries = service.check(max_len=max_len, samples=samples, seed=seed, laws=laws)
        except ValueError as e:
            return _error('Invalid request', str(e), 400)
        failed = [summary for summary in summaries if not summary.holds]
        body = {
            'surface': service.surface.word.text,
            'holds': not failed,
            'laws': [
                {
                    'law': summary.law,
                    'checked': summary.checked,
                    'failures': summary.failures,
                    'holds': summary.holds,
                }
                for summary in summaries
            ],
        }
        if failed:
            report = failed[0].first_failure
            body['first_failure'] = {
                'law': report.law,
                'witness': [str(item) for item in report.witness],
                'residual': report.residual.format_text(),
            }
        return jsonify({'success': True, 'data': body})

    return _handle(compute)


@app.route('/api/surface-info', methods=['POST'])
def api_surface_info():
    """API endpoint describing a surface symbol."""
    fields = _require(request.get_json(silent=True), 'surface')
    if fields is None:
        return _error('Invalid request', "Please provide 'surface'", 400)
    (surface,) = fields
    return _handle(lambda: jsonify({'success': True, 'data': _service(surface).info()}))


@app.route('/api/health', methods=['GET'])
def health_check():
    """Health check endpoint for monitoring."""
    return jsonify({
        'status': 'healthy',
        'service': SERVICE_NAME,
        'version': VERSION,
    })


@app.errorhandler(404)
def not_found(error):
    """Handle 404 errors."""
    return _error('Not found', 'The requested resource was not found', 404)


@app.errorhandler(500)
def internal_error(error):
    """Handle 500 errors."""
    logger.error(f"Internal server error: {error}")
    return _error('Internal server error', 'An unexpected error occurred', 500)


if __name__ == '__main__':
    logger.info(f"Starting {SERVICE_NAME} service on port {settings.port}")
    logger.info(f"Debug mode: {settings.debug}")

    app.run(
        host='0.0.0.0',
        port=settings.port,
        debug=settings.debug
    )
