"""
Flask web application for the correlator toolkit.
Exposes the correlator, diagram, verification and Virasoro jobs as a JSON API.
"""

import os
import sys
import logging
from pathlib import Path
from typing import Any, Dict, Optional, Tuple

from dotenv import load_dotenv
from flask import Flask, jsonify, request
from flask_cors import CORS

# Load .env file from project root
env_path = Path(__file__).parent.parent / '.env'
if env_path.exists():
    load_dotenv(env_path)

# Add parent directory to path
sys.path.append(str(Path(__file__).parent.parent))

from algebra_layer import __version__ as ALGEBRA_VERSION
from correlator_layer import PoleError
from jobs import (
    EXIT_INPUT_ERROR,
    EXIT_OK,
    EXIT_POLE,
    VALID_COMMANDS,
    InputFormatError,
    JobError,
    __version__ as JOBS_VERSION,
    build_job_config,
    error_report,
    execute_job,
    exit_code_for,
    parse_points,
)

logging.basicConfig(
    stream=sys.stderr,
    level=getattr(logging, os.getenv('JORDAN_VOA_LOG_LEVEL', 'INFO').upper(), logging.INFO),
    format='%(levelname)s %(name)s: %(message)s',
)
logger = logging.getLogger(__name__)

app = Flask(__name__)
CORS(app)

# request fields copied into the job flags; config files are never read from requests
REQUEST_FIELDS = ('r', 'bound', 'seed', 'n', 'dim', 'prop2', 'expand', 'corrupt')

HTTP_STATUS = {
    EXIT_OK: 200,
    EXIT_INPUT_ERROR: 400,
    EXIT_POLE: 422,
}


def _points_from_request(points: Any) -> Optional[Dict[str, Any]]:
    """Accept "z1=1,z2=0" or {"z1": "1", "z2": 0}."""
    if points is None:
        return None
    if isinstance(points, dict):
        points = ','.join(f'{name}={value}' for name, value in points.items())
    if not isinstance(points, str):
        raise InputFormatError("'points' must be a string or an object")
    return parse_points(points)


def _flags_from_request(data: Dict[str, Any]) -> Dict[str, Any]:
    flags = {key: data.get(key) for key in REQUEST_FIELDS}
    flags['points'] = _points_from_request(data.get('points'))
    flags['output_format'] = 'json'
    if 'input' in data:
        if not isinstance(data['input'], dict):
            raise InputFormatError("'input' must be an object with 'dim', 'gram' and 'pairs'")
        flags['input_data'] = data['input']
    return flags


def _envelope(exit_code: int, report: Dict[str, Any]) -> Tuple[Any, int]:
    body = {
        'success': exit_code == EXIT_OK,
        'exit_code': exit_code,
        'report': report,
    }
    return jsonify(body), HTTP_STATUS.get(exit_code, 200)


def _run(command: str) -> Tuple[Any, int]:
    data = request.get_json(silent=True)
    if data is None:
        data = {}
    if not isinstance(data, dict):
        error = InputFormatError('Request body must be a JSON object')
        return _envelope(EXIT_INPUT_ERROR, error_report({'command': command}, error))
    try:
        cfg = build_job_config(command, _flags_from_request(data))
    except (JobError, PoleError) as e:
        logger.warning("Rejected %s request: %s", command, e)
        header = {'command': command, 'seed': data.get('seed'), 'bound': data.get('bound'),
                  'r': data.get('r') or 'symbolic'}
        return _envelope(exit_code_for(e), error_report(header, e))
    exit_code, report = execute_job(cfg)
    return _envelope(exit_code, report)


@app.route('/api/correlator', methods=['POST'])
def correlator():
    """Derangement sum (and diagram sum) of the posted data."""
    try:
        return _run('correlator')
    except Exception as e:
        logger.exception("Correlator request failed")
        return jsonify({'success': False, 'error': str(e)}), 500


@app.route('/api/diagrams', methods=['POST'])
def diagrams():
    """Derangements, diagrams and fibre sizes."""
    try:
        return _run('diagrams')
    except Exception as e:
        logger.exception("Diagrams request failed")
        return jsonify({'success': False, 'error': str(e)}), 500


@app.route('/api/verify', methods=['POST'])
def verify():
    """Seeded verification suite; a failed comparison answers 200 with success false."""
    try:
        return _run('verify')
    except Exception as e:
        logger.exception("Verify request failed")
        return jsonify({'success': False, 'error': str(e)}), 500


@app.route('/api/virasoro', methods=['POST'])
def virasoro():
    """Virasoro specialization for n pairs."""
    try:
        return _run('virasoro')
    except Exception as e:
        logger.exception("Virasoro request failed")
        return jsonify({'success': False, 'error': str(e)}), 500


@app.route('/api/status', methods=['GET'])
def get_status():
    """Service status and available commands."""
    return jsonify({
        'success': True,
        'status': 'ok',
        'commands': list(VALID_COMMANDS),
        'versions': {'algebra_layer': ALGEBRA_VERSION, 'jobs': JOBS_VERSION},
    })


if __name__ == '__main__':
    port = int(os.getenv('PORT', 5001))
    logger.info("Starting correlator API on port %d", port)
    app.run(debug=False, host='0.0.0.0', port=port)
