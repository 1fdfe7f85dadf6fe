import math

from django.test import SimpleTestCase


class HealthEndpointTests(SimpleTestCase):
    def test_health(self):
        response = self.client.get('/api/health')
        self.assertEqual(response.status_code, 200)
        self.assertEqual(response.json(), {'status': 'ok', 'burau_convention': True})


class WordEndpointTests(SimpleTestCase):
    def test_normalize(self):
        response = self.client.get('/api/normalize', {'word': 's1^3 s2^-2'})
        self.assertEqual(response.status_code, 200)
        body = response.json()
        self.assertEqual(body['normal_form'], 'Split(j=1, k=3, b1=a2^-1, l=0)')
        self.assertEqual(body['theta_word'], 'a1 a2^-1')

    def test_syllables(self):
        response = self.client.get('/api/syllables', {'pure_word': 'a1 a2 a1 a2 a1 a2 a1', 'cyclic': 'true'})
        body = response.json()
        self.assertEqual(body['degrees'], [2, 5])
        self.assertEqual([s['kind'] for s in body['syllables']], ['Form1', 'Form2'])

    def test_syntax_error_is_a_bad_request(self):
        response = self.client.get('/api/normalize', {'word': 's1 x2'})
        self.assertEqual(response.status_code, 400)
        body = response.json()
        self.assertEqual(body['error'], 'syntax')
        self.assertIn('x2', body['detail'])


class BoundsEndpointTests(SimpleTestCase):
    def test_pure_word(self):
        response = self.client.get('/api/bounds', {'pure_word': 'a1^2 a2^-3', 'boundary': 'pb'})
        self.assertEqual(response.status_code, 200)
        body = response.json()
        self.assertEqual(body['boundary'], 'pb_pb')
        self.assertAlmostEqual(body['L'], math.log(77), places=12)

    def test_braid_word(self):
        body = self.client.get('/api/bounds', {'word': 'd^2'}).json()
        self.assertEqual(body['exceptional'], 'delta_power')
        self.assertEqual(body['lambda_upper'], 0.0)

    def test_unsupported_combination(self):
        response = self.client.get('/api/bounds', {'word': 's1 s2', 'boundary': 'conjugacy'})
        self.assertEqual(response.status_code, 400)
        self.assertEqual(response.json()['error'], 'unsupported_combination')

    def test_missing_word(self):
        response = self.client.get('/api/bounds')
        self.assertEqual(response.status_code, 400)
        self.assertEqual(response.json()['error'], 'usage')


class EntropyAndSlalomEndpointTests(SimpleTestCase):
    def test_entropy(self):
        body = self.client.get('/api/entropy', {'pure_word': 'a1^-1 a2'}).json()
        self.assertEqual(body['verdict'], 'PASS')
        self.assertAlmostEqual(body['entropy_exact'], math.log(3 + 2 * math.sqrt(2)), places=12)

    def test_slalom(self):
        body = self.client.get('/api/slalom', {'M': 2}).json()
        self.assertTrue(body['contained'])
        self.assertAlmostEqual(body['half_extremal_length'], 0.7297, delta=1e-3)

    def test_slalom_domain(self):
        response = self.client.get('/api/slalom', {'M': -1})
        self.assertEqual(response.status_code, 400)
        self.assertEqual(response.json()['error'], 'domain')
